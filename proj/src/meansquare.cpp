#include "wdiv/meansquare.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wdiv/errors.hpp"
#include "wdiv/tail.hpp"

namespace wdiv {

namespace {

constexpr double kPi = std::numbers::pi;

// sum_{i=0}^{j} (-1/c)^i j!/(j-i)! L^{j-i}
double log_poly(int j, double c, double L) {
  double sum = 0.0, coef = 1.0;
  for (int i = 0; i <= j; ++i) {
    sum += coef * std::pow(L, j - i);
    coef *= -(j - i) / c;
  }
  return sum;
}

MainSeries main_series(double X, double c, double pref, const DivisorTable& t, std::uint64_t cutoff) {
  if (!(X >= 1.0)) throw DomainError("X must be >= 1");
  if (cutoff < 1) throw DomainError("cutoff must be >= 1");
  if (cutoff > t.xmax()) throw OutOfRange("cutoff beyond table xmax");
  const double L = std::log(X);
  const double P4 = log_poly(4, c, L), P3 = log_poly(3, c, L), P2 = log_poly(2, c, L), P1 = log_poly(1, c, L);
  double sum = 0.0, comp = 0.0;
  for (std::uint64_t n = 1; n <= cutoff; ++n) {
    const double d = t.d(n), f1 = t.f1(n), f2 = t.f2(n);
    const double bracket = d * d / 16.0 * P4 + 0.5 * d * f1 * P3 + 0.5 * (d * f2 + f1 * f1) * P2 +
                           2.0 * f1 * f2 * P1 + f2 * f2;
    const double term = std::pow(static_cast<double>(n), -c) * bracket;
    const double next = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - next) + term : (term - next) + sum;
    sum = next;
  }
  // f1 = 0 identically and |f2| <= d log^2 n / 4, so
  // |bracket| <= d^2 (|P4|/16 + |P2| log^2 n / 8 + log^4 n / 16)
  auto g = [&](double x) {
    double l = std::log(x);
    return std::pow(x, -c) * (std::abs(P4) / 16.0 + std::abs(P2) * l * l / 8.0 + l * l * l * l / 16.0);
  };
  MainSeries out;
  out.value = pref * (sum + comp);
  out.tail.cutoff = cutoff;
  out.tail.tail_bound = pref * partial_summation_tail(static_cast<double>(cutoff), 3, g);
  return out;
}

}  // namespace

MainSeries theorem2_main(double X, std::int64_t k, const DivisorTable& t, std::uint64_t cutoff) {
  if (k < 1) throw DomainError("k must be positive");
  const double pref = static_cast<double>(k) / (6.0 * kPi * kPi) * std::pow(X, 1.5);
  return main_series(X, 1.5, pref, t, cutoff);
}

MainSeries theorem4_main(double X, std::int64_t k, int a, const DivisorTable& t, std::uint64_t cutoff) {
  if (k < 1) throw DomainError("k must be positive");
  if (a < 1 || a > 8) throw DomainError("a must be in [1, 8]");
  const double c = a + 1.5;
  const double pref = 1.0 / (2.0 * kPi * c) * std::pow(static_cast<double>(k) / (2.0 * kPi), 2 * a + 1) *
                      std::pow(X, c);
  return main_series(X, c, pref, t, cutoff);
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1 || n > 64) throw DomainError("Gauss-Legendre order must be in [1, 64]");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

namespace {

double binom(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Prefix sums S_j(m) = sum_{n <= m} D1(n) e(nh/k) n^j for j = 0..a, so that on
// [m, m+1) B_a(x) = (1/a!) sum_j C(a,j) x^{a-j} (-1)^j S_j(m).
class Integrand {
 public:
  Integrand(double hi, const DivisorTable& t, const MainTerm& main, int nodes)
      : main_(main), a_(main.params().a) {
    if (!(hi <= static_cast<double>(t.xmax()))) throw OutOfRange("X beyond table xmax");
    gauss_legendre(nodes, gx_, gw_);
    const auto top = static_cast<std::uint64_t>(std::floor(hi));
    S_.assign(static_cast<std::size_t>(a_ + 1) * (top + 1), 0.0);
    RootTable e(main.params().phase.k);
    const std::int64_t h = main.params().phase.h, k = main.params().phase.k;
    std::vector<cplx> run(a_ + 1, 0.0), comp(a_ + 1, 0.0);
    std::int64_t r = 0;
    for (std::uint64_t n = 1; n <= top; ++n) {
      r += h;
      if (r >= k) r -= k;
      const cplx c = t.D1(n) * e(r);
      double pw = 1.0;
      for (int j = 0; j <= a_; ++j) {
        const cplx term = c * pw;
        const cplx next = run[j] + term;
        comp[j] += std::abs(run[j]) >= std::abs(term) ? (run[j] - next) + term : (term - next) + run[j];
        run[j] = next;
        S_[n * (a_ + 1) + j] = run[j] + comp[j];
        pw *= static_cast<double>(n);
      }
    }
    fact_ = 1.0;
    for (int i = 2; i <= a_; ++i) fact_ *= i;
    for (int j = 0; j <= a_; ++j) coef_.push_back(binom(a_, j) * ((j % 2) ? -1.0 : 1.0) / fact_);
  }

  // integral over [lo, hi] inside one unit interval [m, m+1)
  double piece(std::uint64_t m, double lo, double hi) const {
    if (!(hi > lo)) return 0.0;
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double acc = 0.0;
    for (std::size_t i = 0; i < gx_.size(); ++i) {
      const double x = mid + half * gx_[i];
      cplx B = 0.0;
      for (int j = 0; j <= a_; ++j) B += coef_[j] * std::pow(x, a_ - j) * S_[m * (a_ + 1) + j];
      acc += gw_[i] * std::norm(B - main_(x));
    }
    return half * acc;
  }

 private:
  const MainTerm& main_;
  int a_;
  double fact_ = 1.0;
  std::vector<double> gx_, gw_, coef_;
  std::vector<cplx> S_;
};

void check_range(double lo, double hi) {
  if (!(lo >= 1.0) || !(hi >= lo)) throw DomainError("integration range must satisfy 1 <= lo <= hi");
}

constexpr std::uint64_t kBlock = 1024;

}  // namespace

double mean_square_integral(double lo, double hi, const DivisorTable& t, const MainTerm& main, int nodes) {
  check_range(lo, hi);
  Integrand f(hi, t, main, nodes);
  const auto m0 = static_cast<std::uint64_t>(std::floor(lo));
  const auto m1 = static_cast<std::uint64_t>(std::floor(hi));
  const std::uint64_t count = m1 - m0 + 1;
  const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    double acc = 0.0;
    const std::uint64_t first = m0 + static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t last = std::min(m1, first + kBlock - 1);
    for (std::uint64_t m = first; m <= last; ++m) {
      acc += f.piece(m, std::max(lo, double(m)), std::min(hi, double(m + 1)));
    }
    partial[b] = acc;
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

double mean_square_integral_serial(double lo, double hi, const DivisorTable& t, const MainTerm& main,
                                   int nodes) {
  check_range(lo, hi);
  Integrand f(hi, t, main, nodes);
  const auto m0 = static_cast<std::uint64_t>(std::floor(lo));
  const auto m1 = static_cast<std::uint64_t>(std::floor(hi));
  double total = 0.0, acc = 0.0;
  for (std::uint64_t m = m0; m <= m1; ++m) {
    acc += f.piece(m, std::max(lo, double(m)), std::min(hi, double(m + 1)));
    if ((m - m0 + 1) % kBlock == 0) {
      total += acc;
      acc = 0.0;
    }
  }
  return total + acc;
}

double empirical_mean_square(double X, const DivisorTable& t, const MainTerm& main, int nodes) {
  return mean_square_integral(1.0, X, t, main, nodes);
}

std::vector<MeanSquareReport> mean_square_sweep(const std::vector<double>& Xs, const DivisorTable& t,
                                                const MainTerm& main, std::uint64_t cutoff) {
  if (!std::is_sorted(Xs.begin(), Xs.end())) throw DomainError("X list must be ascending");
  std::vector<MeanSquareReport> out;
  double acc = 0.0, prev = 1.0;
  const auto& mp = main.params();
  for (double X : Xs) {
    acc += mean_square_integral(prev, X, t, main);
    prev = X;
    MainSeries ms = mp.a == 0 ? theorem2_main(X, mp.phase.k, t, cutoff)
                              : theorem4_main(X, mp.phase.k, mp.a, t, cutoff);
    MeanSquareReport r;
    r.X = X;
    r.empirical = acc;
    r.theorem_main = ms.value;
    r.ratio = acc / ms.value;
    r.series_cutoff = cutoff;
    r.series_tail = ms.tail.tail_bound;
    out.push_back(r);
  }
  return out;
}

}  // namespace wdiv
