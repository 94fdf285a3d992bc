#include "wdiv/dirichlet.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "wdiv/errors.hpp"
#include "wdiv/tail.hpp"

namespace wdiv {

namespace {

constexpr double kPi = std::numbers::pi;

// sum_{a,b} e_k(a b h) u_a v_b over a, b = 1..k
cplx contract(const RationalPhase& p, const RootTable& e, const std::vector<cplx>& u,
              const std::vector<cplx>& v) {
  const std::int64_t k = p.k;
  cplx total = 0.0;
  for (std::int64_t a = 1; a <= k; ++a) {
    const std::int64_t step = (a * p.h) % k;
    std::int64_t r = 0;
    cplx inner = 0.0;
    for (std::int64_t b = 1; b <= k; ++b) {
      r += step;
      if (r >= k) r -= k;
      inner += e(r) * v[b - 1];
    }
    total += u[a - 1] * inner;
  }
  return total;
}

}  // namespace

TwistedValues twisted_hurwitz(cplx s, const RationalPhase& p) {
  const std::int64_t k = p.k;
  const double lk = std::log(static_cast<double>(k));
  const cplx ks = std::exp(-s * lk);
  std::vector<cplx> z(k), u(k), w(k);
  for (std::int64_t a = 1; a <= k; ++a) {
    auto hz = hurwitz_pair(s, static_cast<double>(a) / static_cast<double>(k));
    z[a - 1] = ks * hz.value;
    u[a - 1] = ks * (hz.derivative - lk * hz.value);
  }
  RootTable e(k);
  TwistedValues out;
  out.F = contract(p, e, u, u);
  out.E = contract(p, e, z, z);
  out.F0 = contract(p, e, u, z);
  return out;
}

cplx F_hurwitz(cplx s, const RationalPhase& p) { return twisted_hurwitz(s, p).F; }
cplx E_hurwitz(cplx s, const RationalPhase& p) { return twisted_hurwitz(s, p).E; }
cplx F0_hurwitz(cplx s, const RationalPhase& p) { return twisted_hurwitz(s, p).F0; }

namespace {

SeriesValue series(cplx s, const RationalPhase& p, const DivisorTable& t, Weight w) {
  if (s.real() < 2.0) throw ConvergenceTooSlow("series evaluation needs Re s >= 2");
  const std::uint64_t M = t.xmax();
  if (M < 2) throw OutOfRange("table too small for a series evaluation");
  RootTable e(p.k);
  cplx sum = 0.0, comp = 0.0;
  std::int64_t r = 0;
  for (std::uint64_t n = 1; n <= M; ++n) {
    r += p.h;
    if (r >= p.k) r -= p.k;
    double c = t.weight(w, n);
    if (c == 0.0) continue;
    cplx term = c * std::exp(-s * std::log(static_cast<double>(n))) * e(r);
    cplx next = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - next) + term;
    } else {
      comp += (term - next) + sum;
    }
    sum = next;
  }
  const double sigma = s.real();
  std::function<double(double)> g;
  switch (w) {
    case Weight::d:
      g = [sigma](double x) { return std::pow(x, -sigma); };
      break;
    case Weight::D1:
      g = [sigma](double x) {
        double l = std::log(x);
        return 0.25 * l * l * std::pow(x, -sigma);
      };
      break;
    case Weight::d01:
      g = [sigma](double x) { return 0.5 * std::log(x) * std::pow(x, -sigma); };
      break;
  }
  SeriesValue out;
  out.value = sum + comp;
  out.tail.cutoff = M;
  out.tail.tail_bound = partial_summation_tail(static_cast<double>(M), 1, g);
  return out;
}

}  // namespace

SeriesValue F_series(cplx s, const RationalPhase& p, const DivisorTable& t) {
  return series(s, p, t, Weight::D1);
}
SeriesValue E_series(cplx s, const RationalPhase& p, const DivisorTable& t) {
  return series(s, p, t, Weight::d);
}
SeriesValue F0_series(cplx s, const RationalPhase& p, const DivisorTable& t) {
  return series(s, p, t, Weight::d01);
}

LaurentData laurent_at_1(const RationalPhase& p) {
  const double k = static_cast<double>(p.k);
  const double l = std::log(k);
  const auto z = zeta_taylor();
  const double g = z.c0, g1 = z.c1, g2 = z.c2;
  LaurentData c;
  c.c_m4 = 1.0 / k;
  c.c_m3 = 2.0 * l / k;
  c.c_m2 = (l * l + 2.0 * g * l - 2.0 * g1) / k;
  c.c_m1 = 2.0 * (-l * l * l + g * l * l - 2.0 * g2) / k;
  return c;
}

LaurentData laurent_derived(const RationalPhase& p) {
  const double k = static_cast<double>(p.k);
  const double l = std::log(k);
  const auto z = zeta_taylor();
  const double g = z.c0, g1 = z.c1, g2 = z.c2;
  LaurentData c;
  c.c_m4 = 1.0 / k;
  c.c_m3 = 0.0;
  c.c_m2 = (-l * l + 2.0 * g * l - 2.0 * g1) / k;
  c.c_m1 = (2.0 / 3.0 * l * l * l - 2.0 * g * l * l + 4.0 * g1 * l - 4.0 * g2) / k;
  return c;
}

LaurentData laurent_fit(const RationalPhase& p, double radius, int nodes) {
  if (!(radius > 0.0 && radius < 1.0) || nodes < 8) throw DomainError("bad contour parameters");
  cplx c[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
  for (int m = 0; m < nodes; ++m) {
    double th = 2.0 * kPi * m / nodes;
    cplx u = std::polar(radius, th);
    cplx f = F_hurwitz(1.0 + u, p);
    cplx uj = 1.0;
    for (int j = 1; j <= 4; ++j) {
      uj *= u;
      c[j] += f * uj;
    }
  }
  LaurentData out;
  out.c_m1 = c[1].real() / nodes;
  out.c_m2 = c[2].real() / nodes;
  out.c_m3 = c[3].real() / nodes;
  out.c_m4 = c[4].real() / nodes;
  return out;
}

cplx F_at_zero(const RationalPhase& p) {
  const std::int64_t k = p.k;
  const double kd = static_cast<double>(k);
  const double l = std::log(kd);
  const double half_log_2pi = 0.5 * std::log(2.0 * kPi);
  std::vector<cplx> lg(k), z(k);
  for (std::int64_t a = 1; a <= k; ++a) {
    lg[a - 1] = log_gamma(static_cast<double>(a) / kd) - half_log_2pi;
    z[a - 1] = 0.5 - static_cast<double>(a) / kd;
  }
  RootTable e(k);
  return contract(p, e, lg, lg) - 2.0 * l * contract(p, e, z, lg) + l * l * contract(p, e, z, z);
}

cplx F_at_negative(int n, const RationalPhase& p) {
  if (n < 0 || n > 8) throw DomainError("F_at_negative supports n in [0, 8]");
  return F_hurwitz(cplx(-static_cast<double>(n), 0.0), p);
}

cplx funceq_rhs(cplx s, const RationalPhase& p, Method m, const DivisorTable* t) {
  const cplx r = 1.0 - s;
  const RationalPhase plus = reflected(p, +1);
  const RationalPhase minus = reflected(p, -1);
  TwistedValues P, M;
  if (m == Method::series) {
    if (!t) throw DomainError("series method needs a divisor table");
    P = {F_series(r, plus, *t).value, E_series(r, plus, *t).value, F0_series(r, plus, *t).value};
    M = {F_series(r, minus, *t).value, E_series(r, minus, *t).value, F0_series(r, minus, *t).value};
  } else {
    P = twisted_hurwitz(r, plus);
    M = twisted_hurwitz(r, minus);
  }
  const double k = static_cast<double>(p.k);
  const double lk = std::log(k);
  const double l2pi = std::log(2.0 * kPi);
  const double L4 = std::log(4.0 * kPi * kPi / (k * k));
  const cplx c = std::cos(kPi * s);
  const cplx sn = std::sin(kPi * s);
  const cplx ps = digamma(r);

  const cplx t1 = P.F - c * M.F;
  const cplx t2 = (P.F0 - c * M.F0) * (2.0 * ps - L4) - kPi * sn * M.F0;
  const cplx t3 = (P.E - c * M.E) * (l2pi * l2pi + ps * ps - L4 * ps - std::log(4.0 * kPi * kPi / k) * lk) +
                  0.25 * kPi * kPi * (P.E + c * M.E) + kPi * sn * M.E * (std::log(2.0 * kPi / k) - ps);
  const cplx pref = 2.0 * std::exp((2.0 * s - 2.0) * l2pi + (1.0 - 2.0 * s) * lk + 2.0 * log_gamma(r));
  return pref * (t1 + t2 + t3);
}

double funceq_residual(cplx s, const RationalPhase& p, Method m, const DivisorTable* t) {
  if (s.real() > -1.0) throw DomainError("functional equation checks need Re s <= -1");
  const cplx lhs = F_hurwitz(s, p);
  const cplx rhs = funceq_rhs(s, p, m, t);
  return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs));
}

}  // namespace wdiv
