#include "wdiv/tail.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "wdiv/errors.hpp"

namespace wdiv {

namespace {

constexpr std::array<double, 8> kNodes = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kWeights = {
    0.1012285362903763, 0.2223810344533745, 0.3137066671994486, 0.3626837833783620,
    0.3626837833783620, 0.3137066671994486, 0.2223810344533745, 0.1012285362903763};

}  // namespace

double partial_summation_tail(double M, int p, const std::function<double(double)>& g) {
  if (!(M >= 1.0)) throw DomainError("tail cutoff must be >= 1");
  // Decreasing majorant G(t) = sup_{u >= t} g(u): constant gmax up to the last local
  // maximum s, then g itself. The bound becomes A(s) gmax + int_s^inf A'(t) g(t) dt.
  double lM = std::log(M);
  constexpr double kStep = 0.01;
  constexpr int kScan = 5000;
  double gmax = g(M), prev = gmax, start = lM;
  for (int i = 1; i <= kScan; ++i) {
    double u = lM + i * kStep;
    double gu = g(std::exp(u));
    if (gu > prev) start = u + kStep;
    gmax = std::max(gmax, gu);
    prev = gu;
  }
  gmax *= 1.001;  // grid resolution
  lM = start;
  M = std::exp(lM);
  double total = std::pow(1.0 + lM, p) * M * gmax;
  double prev_g = g(M);
  // substitute t = e^u, integrate panels of unit width in u
  for (int panel = 0; panel < 4000; ++panel) {
    double lo = lM + panel;
    double part = 0.0;
    for (std::size_t i = 0; i < kNodes.size(); ++i) {
      double u = lo + 0.5 * (kNodes[i] + 1.0);
      double t = std::exp(u);
      double gt = g(t);
      double lt = 1.0 + u;
      part += 0.5 * kWeights[i] * std::pow(lt, p - 1) * (lt + p) * gt * t;
    }
    double g_end = g(std::exp(lo + 1.0));
    if (g_end > prev_g * (1.0 + 1e-12)) throw NumericFailure("tail weight is not decreasing past the cutoff");
    prev_g = g_end;
    total += part;
    if (panel > 4 && part < 1e-18 * total) return total;
  }
  throw NumericFailure("tail integral did not converge");
}

}  // namespace wdiv
