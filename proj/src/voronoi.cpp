#include "wdiv/voronoi.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wdiv/errors.hpp"
#include "wdiv/tail.hpp"

namespace wdiv {

namespace {

constexpr double kPi = std::numbers::pi;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_a(int a, int lo) {
  if (a < lo || a > 8) throw DomainError("Riesz order a must be in [" + std::to_string(lo) + ", 8]");
}

// sum_{n=0}^{a} (-1)^n / (n! (a-n)!) F(-n) x^{a-n}
cplx negative_residues(double x, const MainTermParams& mp) {
  cplx sum = 0.0;
  for (int n = 0; n <= mp.a; ++n) {
    double c = ((n % 2) ? -1.0 : 1.0) / (factorial(n) * factorial(mp.a - n));
    sum += c * mp.F_neg[n] * std::pow(x, mp.a - n);
  }
  return sum;
}

}  // namespace

MainTermParams make_main_term_params(const RationalPhase& p, int a) {
  check_a(a, 0);
  MainTermParams mp;
  mp.phase = p;
  mp.a = a;
  mp.stieltjes = stieltjes();
  mp.F_at_zero = F_at_zero(p);
  mp.F_neg.push_back(mp.F_at_zero);
  for (int n = 1; n <= a; ++n) mp.F_neg.push_back(F_at_negative(n, p));
  mp.laurent = laurent_derived(p);
  return mp;
}

cplx main_term_B0(double x, const MainTermParams& mp) {
  if (x < 1.0) throw DomainError("main term needs x >= 1");
  const auto z = zeta_taylor(mp.stieltjes);
  const double g = z.c0, g1 = z.c1, g2 = z.c2;
  const double k = static_cast<double>(mp.phase.k);
  const double l = std::log(k);
  const double L = std::log(x);
  const double bracket = L * L * L / 6.0 + (l - 0.5) * L * L +
                         (l * l + 2.0 * (g - 1.0) * l - 2.0 * g1 + 1.0) * L +
                         (-2.0 * l * l * l + (2.0 * g - 1.0) * l * l - 2.0 * (g - 1.0) * l + 2.0 * g1 -
                          4.0 * g2 - 1.0);
  return x / k * bracket + mp.F_at_zero;
}

cplx main_term_Ba(double x, const MainTermParams& mp) {
  check_a(mp.a, 1);
  const int a = mp.a;
  const auto z = zeta_taylor(mp.stieltjes);
  const double g = z.c0, g1 = z.c1, g2 = z.c2;
  const double k = static_cast<double>(mp.phase.k);
  const double l = std::log(k);
  const double L = std::log(x);
  double H1 = 0.0, H2 = 0.0, H3 = 0.0;
  for (int n = 1; n <= a + 1; ++n) {
    H1 += 1.0 / n;
    H2 += 1.0 / (double(n) * n);
    H3 += 1.0 / (double(n) * n * n);
  }
  const double f2 = factorial(a + 1) * factorial(a + 1);
  const double bracket =
      L * L * L / 6.0 + (l - 0.5 * H1) * L * L +
      (l * (l + 2.0 * g - 2.0 * H1) + 0.5 * H2 + (f2 - 0.5) * H1 * H1 - 2.0 * g1) * L - 2.0 * l * l * l +
      l * l * (2.0 * g - H1) + l * (H2 + ((2.0 * f2 - 1.0) * H1 - 2.0 * g) * H1) - H3 / 3.0 -
      (0.5 * f2 * (H2 + H1 * H1) - H1 * H1 / 3.0 - 2.0 * g1) * H1 - 4.0 * g2;
  return std::pow(x, 1.0 + a) / (factorial(1 + a) * k) * bracket + negative_residues(x, mp);
}

cplx residue_main_term(double x, const MainTermParams& mp, const LaurentData& c) {
  if (!(x > 0.0)) throw DomainError("main term needs x > 0");
  const int a = mp.a;
  const double L = std::log(x);
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (int i = 0; i <= a; ++i) {
    double r = 1.0 / (1.0 + i);
    s1 += r;
    s2 += r * r;
    s3 += r * r * r;
  }
  // derivatives of g(s) = x^{s+a} / (s (s+1) ... (s+a)) at s = 1 via log g
  const double l1 = L - s1, l2 = s2, l3 = -2.0 * s3;
  const double g0 = std::pow(x, 1.0 + a) / factorial(a + 1);
  const double d1 = g0 * l1;
  const double d2 = g0 * (l1 * l1 + l2);
  const double d3 = g0 * (l1 * l1 * l1 + 3.0 * l1 * l2 + l3);
  const double at_one = c.c_m4 * d3 / 6.0 + c.c_m3 * d2 / 2.0 + c.c_m2 * d1 + c.c_m1 * g0;
  return at_one + negative_residues(x, mp);
}

cplx contour_main_term(double x, const RationalPhase& p, int a, double radius, int nodes) {
  check_a(a, 0);
  auto g = [&](cplx s) {
    cplx den = 1.0;
    for (int i = 0; i <= a; ++i) den *= s + static_cast<double>(i);
    return std::exp((s + static_cast<double>(a)) * std::log(x)) / den;
  };
  auto circle = [&](cplx centre, double r) {
    cplx acc = 0.0;
    for (int m = 0; m < nodes; ++m) {
      cplx u = std::polar(r, 2.0 * kPi * m / nodes);
      acc += F_hurwitz(centre + u, p) * g(centre + u) * u;
    }
    return acc / static_cast<double>(nodes);
  };
  cplx total = circle(1.0, radius);
  for (int n = 0; n <= a; ++n) total += circle(-static_cast<double>(n), 0.25);
  return total;
}

MainTerm::MainTerm(const RationalPhase& p, int a, MainTermKind kind)
    : params_(make_main_term_params(p, a)), kind_(kind) {}

cplx MainTerm::printed(double x) const {
  return params_.a == 0 ? main_term_B0(x, params_) : main_term_Ba(x, params_);
}

cplx MainTerm::residue(double x) const { return residue_main_term(x, params_, params_.laurent); }

cplx delta0_direct(double x, const DivisorTable& t, const MainTerm& main) {
  return twisted_partial_sum(t, Weight::D1, x, main.params().phase) - main(x);
}

cplx delta0_voronoi(double x, const RationalPhase& p, std::uint64_t N, const DivisorTable& t) {
  if (N > t.xmax()) throw OutOfRange("N beyond table xmax");
  if (!(x >= 1.0)) throw DomainError("x must be >= 1");
  const double k = static_cast<double>(p.k);
  const double L = std::log(x);
  const double sx = std::sqrt(x);
  RootTable e(p.k);
  cplx s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::int64_t r = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    r -= p.h_inv;
    if (r < 0) r += p.k;
    const double nd = static_cast<double>(n);
    const double kernel = std::pow(nd, -0.75) * std::cos(4.0 * kPi * std::sqrt(nd) * sx / k - 0.25 * kPi);
    const cplx ek = e(r) * kernel;
    s1 += 0.25 * t.d(n) * ek;
    s2 += t.f1(n) * ek;
    s3 += t.f2(n) * ek;
  }
  const double pref = std::sqrt(k) * std::pow(x, 0.25) / (kPi * std::sqrt(2.0));
  return pref * (L * L * s1 + L * s2 + s3);
}

cplx delta_a_direct(double x, const DivisorTable& t, const MainTerm& main) {
  check_a(main.params().a, 1);
  return riesz_sum(t, x, main.params().phase, main.params().a) - main(x);
}

SeriesValue delta_a_series(double x, const RationalPhase& p, int a, std::uint64_t M, const DivisorTable& t,
                           double tolerance) {
  check_a(a, 1);
  if (M > t.xmax()) throw OutOfRange("M beyond table xmax");
  if (!(x > 0.0)) throw DomainError("x must be positive");
  const double k = static_cast<double>(p.k);
  const double L = std::log(x);
  const double sx = std::sqrt(x);
  const double zscale = 4.0 * kPi * sx / k;
  const double sign = (a % 2) ? -1.0 : 1.0;
  const int nu = a + 1;
  RootTable e(p.k);
  cplx sum = 0.0;
  std::int64_t r = 0;
  for (std::uint64_t n = 1; n <= M; ++n) {
    r += p.h_inv;
    if (r >= p.k) r -= p.k;
    const double nd = static_cast<double>(n);
    const double z = zscale * std::sqrt(nd);
    const double w = 0.25 * t.d(n) * L * L + t.f1(n) * L + t.f2(n);
    cplx kernel = e(-r) * bessel_Y(nu, z);
    if (z <= 40.0) kernel += sign * (2.0 / kPi) * e(r) * bessel_K(nu, z);
    sum += w * std::pow(nd, -0.5 * (1.0 + a)) * kernel;
  }
  const double pref = std::pow(k / (2.0 * kPi), a) * std::pow(x, 0.5 * (1.0 + a));

  const double Md = static_cast<double>(M);
  const double zM = zscale * std::sqrt(Md);
  if (zM < std::max(10.0, double(nu) * nu)) {
    throw CutoffTooSmall("Bessel tail bound needs 4 pi sqrt(M x)/k >= max(10, (a+1)^2)");
  }
  // |w_n| <= d(n) (log^2 x + log^2 n) / 4 since f1 = 0 and -d log^2 n / 4 <= f2 <= 0
  auto g = [&](double tt) {
    double lt = std::log(tt);
    double z = zscale * std::sqrt(tt);
    double kern = std::sqrt(2.0 / (kPi * z)) * (1.0 + 1.0 / z) +
                  (2.0 / kPi) * std::sqrt(kPi / (2.0 * z)) * std::exp(-z) * (1.0 + 20.0 / z);
    return 0.25 * (L * L + lt * lt) * std::pow(tt, -0.5 * (1.0 + a)) * kern;
  };
  SeriesValue out;
  out.value = -pref * sum;
  out.tail.cutoff = M;
  out.tail.tail_bound = pref * partial_summation_tail(Md, 1, g);
  if (out.tail.tail_bound > tolerance) {
    throw CutoffTooSmall("tail bound " + std::to_string(out.tail.tail_bound) + " above tolerance");
  }
  return out;
}

namespace {

ComparisonReport voronoi_point(double x, const RationalPhase& p, std::uint64_t N, const DivisorTable& t,
                               const MainTerm& main) {
  std::uint64_t n = N ? N : static_cast<std::uint64_t>(std::floor(x));
  ComparisonReport rep;
  rep.x = x;
  rep.direct = delta0_direct(x, t, main);
  rep.formula = delta0_voronoi(x, p, n, t);
  rep.abs_residual = std::abs(rep.direct - rep.formula);
  rep.envelope = static_cast<double>(p.k) * std::sqrt(x) / std::sqrt(static_cast<double>(n));
  return rep;
}

}  // namespace

std::vector<ComparisonReport> compare_voronoi(const std::vector<double>& xs, const RationalPhase& p,
                                              std::uint64_t N, const DivisorTable& t, const MainTerm& main) {
  std::vector<ComparisonReport> out(xs.size());
  const auto count = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) out[i] = voronoi_point(xs[i], p, N, t, main);
  return out;
}

std::vector<ComparisonReport> compare_voronoi_serial(const std::vector<double>& xs, const RationalPhase& p,
                                                     std::uint64_t N, const DivisorTable& t,
                                                     const MainTerm& main) {
  std::vector<ComparisonReport> out;
  for (double x : xs) out.push_back(voronoi_point(x, p, N, t, main));
  return out;
}

std::vector<ComparisonReport> compare_riesz(const std::vector<double>& xs, const RationalPhase& p, int a,
                                            std::uint64_t M, const DivisorTable& t, const MainTerm& main) {
  std::vector<ComparisonReport> out(xs.size());
  const auto count = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    const double x = xs[i];
    auto series = delta_a_series(x, p, a, M, t);
    ComparisonReport rep;
    rep.x = x;
    rep.direct = delta_a_direct(x, t, main);
    rep.formula = series.value;
    rep.abs_residual = std::abs(rep.direct - rep.formula);
    rep.envelope = std::pow(static_cast<double>(p.k), a + 1) * std::pow(x, 0.5 * a);
    rep.tail_bound = series.tail.tail_bound;
    out[i] = rep;
  }
  return out;
}

double rms(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s / static_cast<double>(v.size()));
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("slope fit needs two or more matching points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> half_integer_grid(double lo, double hi, int points) {
  if (points < 1 || !(hi >= lo)) throw DomainError("bad grid");
  std::vector<double> xs;
  for (int i = 0; i < points; ++i) {
    double t = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
    double x = std::floor(t) + 0.5;
    if (x > hi) x -= 1.0;
    xs.push_back(x);
  }
  return xs;
}

}  // namespace wdiv
