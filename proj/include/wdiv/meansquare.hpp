#pragma once

#include <cstdint>
#include <vector>

#include "wdiv/dirichlet.hpp"
#include "wdiv/divisor_table.hpp"
#include "wdiv/voronoi.hpp"

namespace wdiv {

struct MeanSquareReport {
  double X = 0.0;
  double empirical = 0.0;
  double theorem_main = 0.0;
  double ratio = 0.0;
  std::uint64_t series_cutoff = 0;
  double series_tail = 0.0;
};

struct MainSeries {
  double value = 0.0;
  SeriesTail tail;
};

// Closed-form main term of the integral of |Delta|^2 over [1, X], series over n <= cutoff.
MainSeries theorem2_main(double X, std::int64_t k, const DivisorTable& t, std::uint64_t cutoff);
// Same for Delta_a, a >= 1.
MainSeries theorem4_main(double X, std::int64_t k, int a, const DivisorTable& t, std::uint64_t cutoff);

// Integral of |B_a(x) - main(x)|^2 over [lo, hi], Gauss-Legendre on each unit interval.
// Blocks of intervals are integrated in parallel and reduced in a fixed order.
double mean_square_integral(double lo, double hi, const DivisorTable& t, const MainTerm& main, int nodes = 4);
double mean_square_integral_serial(double lo, double hi, const DivisorTable& t, const MainTerm& main,
                                   int nodes = 4);

double empirical_mean_square(double X, const DivisorTable& t, const MainTerm& main, int nodes = 4);

// Reports at each X (ascending), integrating each slice once.
std::vector<MeanSquareReport> mean_square_sweep(const std::vector<double>& Xs, const DivisorTable& t,
                                                const MainTerm& main, std::uint64_t cutoff);

// Nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace wdiv
