#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "wdiv/dirichlet.hpp"
#include "wdiv/divisor_table.hpp"
#include "wdiv/special.hpp"

namespace wdiv {

struct MainTermParams {
  RationalPhase phase;
  int a = 0;
  StieltjesSet stieltjes;
  cplx F_at_zero;
  std::vector<cplx> F_neg;  // F(-n, h/k), n = 0..a
  LaurentData laurent;      // principal part used by the residue form
};

MainTermParams make_main_term_params(const RationalPhase& p, int a);

// Main term of B(x, h/k) with the polynomial exactly as printed.
cplx main_term_B0(double x, const MainTermParams& mp);
// Main term of B_a(x, h/k), a >= 1, bracket exactly as printed.
cplx main_term_Ba(double x, const MainTermParams& mp);
// Res_{s=1} F(s) x^{s+a} / (s (s+1) ... (s+a)) from the given principal part, plus
// the residues at s = 0, -1, ..., -a.
cplx residue_main_term(double x, const MainTermParams& mp, const LaurentData& c);
// Same residues by trapezoid contour integrals of F itself.
cplx contour_main_term(double x, const RationalPhase& p, int a, double radius = 0.05, int nodes = 64);

enum class MainTermKind { printed, residue };

class MainTerm {
 public:
  MainTerm(const RationalPhase& p, int a, MainTermKind kind = MainTermKind::residue);
  cplx operator()(double x) const { return kind_ == MainTermKind::printed ? printed(x) : residue(x); }
  cplx printed(double x) const;
  cplx residue(double x) const;
  const MainTermParams& params() const { return params_; }
  MainTermKind kind() const { return kind_; }

 private:
  MainTermParams params_;
  MainTermKind kind_;
};

cplx delta0_direct(double x, const DivisorTable& t, const MainTerm& main);
cplx delta0_voronoi(double x, const RationalPhase& p, std::uint64_t N, const DivisorTable& t);

cplx delta_a_direct(double x, const DivisorTable& t, const MainTerm& main);
// Bessel series truncated at n <= M. Throws CutoffTooSmall when the tail bound
// exceeds tolerance or cannot be established at this cutoff.
SeriesValue delta_a_series(double x, const RationalPhase& p, int a, std::uint64_t M, const DivisorTable& t,
                           double tolerance = INFINITY);

struct ComparisonReport {
  double x = 0.0;
  cplx direct;
  cplx formula;
  double abs_residual = 0.0;
  double envelope = 0.0;
  double tail_bound = 0.0;
};

// N = 0 selects N = floor(x) per point. Parallel over points; each point sums in
// a fixed order, so the result does not depend on the thread count.
std::vector<ComparisonReport> compare_voronoi(const std::vector<double>& xs, const RationalPhase& p,
                                              std::uint64_t N, const DivisorTable& t, const MainTerm& main);
std::vector<ComparisonReport> compare_voronoi_serial(const std::vector<double>& xs, const RationalPhase& p,
                                                     std::uint64_t N, const DivisorTable& t,
                                                     const MainTerm& main);
std::vector<ComparisonReport> compare_riesz(const std::vector<double>& xs, const RationalPhase& p, int a,
                                            std::uint64_t M, const DivisorTable& t, const MainTerm& main);

double rms(const std::vector<double>& v);
// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// Half-integers spread evenly over [lo, hi].
std::vector<double> half_integer_grid(double lo, double hi, int points);

}  // namespace wdiv
