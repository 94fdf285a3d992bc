#include "wdiv/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "wdiv/errors.hpp"

namespace wdiv {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2j} / (2j)! for j = 1..40. Exact rationals through B_30, then
// (-1)^{j+1} 2 zeta(2j) / (2 pi)^{2j}, where zeta(2j) is 1 to double precision
// after a few terms.
const std::array<double, 41>& bernoulli_over_factorial() {
  static const std::array<double, 41> table = [] {
    constexpr std::array<std::pair<double, double>, 15> b = {{
        {1.0, 6.0},
        {-1.0, 30.0},
        {1.0, 42.0},
        {-1.0, 30.0},
        {5.0, 66.0},
        {-691.0, 2730.0},
        {7.0, 6.0},
        {-3617.0, 510.0},
        {43867.0, 798.0},
        {-174611.0, 330.0},
        {854513.0, 138.0},
        {-236364091.0, 2730.0},
        {8553103.0, 6.0},
        {-23749461029.0, 870.0},
        {8615841276005.0, 14322.0},
    }};
    std::array<double, 41> t{};
    double fact = 1.0;
    for (int j = 1; j <= 40; ++j) {
      fact *= (2.0 * j - 1.0) * (2.0 * j);
      if (j <= 15) {
        t[j] = b[j - 1].first / b[j - 1].second / fact;
      } else {
        double z = 1.0;
        for (int m = 2; m <= 6; ++m) z += std::pow(m, -2.0 * j);
        double sign = (j % 2 == 1) ? 1.0 : -1.0;
        t[j] = sign * 2.0 * z * std::pow(2.0 * kPi, -2.0 * j);
      }
    }
    return t;
  }();
  return table;
}

void check_box(cplx s) {
  if (s.real() < -10.0 || s.real() > 30.0 || std::abs(s.imag()) > 100.0) {
    throw DomainError("s outside the evaluation box -10 <= Re s <= 30, |Im s| <= 100");
  }
}

bool near_nonpositive_integer(cplx z) {
  if (z.real() > 0.5) return false;
  double r = std::round(z.real());
  return std::abs(z - cplx(r, 0.0)) < 1e-14;
}

}  // namespace

HurwitzPair hurwitz_pair(cplx s, double a) {
  if (std::abs(s - 1.0) < 1e-8) throw PoleAt1("hurwitz zeta pole at s = 1");
  if (!(a > 0.0)) throw DomainError("hurwitz parameter a must be positive");
  check_box(s);
  const auto& bf = bernoulli_over_factorial();

  // The asymptotic tail needs |s + 2j| well below 2 pi (N + a) over the terms used.
  // Extended precision offsets the cancellation ~ eps N^{1 - Re s} at negative Re s.
  using lcplx = std::complex<long double>;
  const lcplx ls(s.real(), s.imag());
  const int N = 10 + static_cast<int>(std::ceil(0.6 * std::abs(s)));
  lcplx val = 0.0L, der = 0.0L;
  for (int n = 0; n < N; ++n) {
    long double w = n + static_cast<long double>(a);
    long double lw = std::log(w);
    lcplx t = std::exp(-ls * lw);
    val += t;
    der -= lw * t;
  }
  const long double w = N + static_cast<long double>(a);
  const long double lw = std::log(w);
  const lcplx ws = std::exp(-ls * lw);
  const lcplx sm1 = ls - 1.0L;
  val += w * ws / sm1 + 0.5L * ws;
  der += -lw * w * ws / sm1 - w * ws / (sm1 * sm1) - 0.5L * lw * ws;

  // sum_j b_j P_j(s) w^{-s-2j+1}, P_j = s (s+1) ... (s+2j-2)
  lcplx P = ls, dP = 1.0L;
  lcplx pw = ws / w;
  for (int j = 1; j <= 40; ++j) {
    const long double b = bf[j];
    lcplx term = b * P * pw;
    lcplx dterm = b * (dP - lw * P) * pw;
    val += term;
    der += dterm;
    if (std::abs(term) <= 1e-19L * std::max(1.0L, std::abs(val)) &&
        std::abs(dterm) <= 1e-19L * std::max(1.0L, std::abs(der))) {
      break;
    }
    for (int q = 2 * j - 1; q <= 2 * j; ++q) {
      lcplx f = ls + static_cast<long double>(q);
      dP = dP * f + P;
      P *= f;
    }
    pw /= w * w;
  }
  return {cplx(static_cast<double>(val.real()), static_cast<double>(val.imag())),
          cplx(static_cast<double>(der.real()), static_cast<double>(der.imag()))};
}

cplx hurwitz_zeta(cplx s, double a) { return hurwitz_pair(s, a).value; }
cplx hurwitz_zeta_ds(cplx s, double a) { return hurwitz_pair(s, a).derivative; }

double stieltjes_constant(int m, int N, int p) {
  const auto& bf = bernoulli_over_factorial();
  double sum = 0.0;
  for (int j = 2; j <= N; ++j) {
    double lj = std::log(static_cast<double>(j));
    sum += std::pow(lj, m) / j;
  }
  if (m == 0) sum += 1.0;
  const double xN = N;
  const double L = std::log(xN);
  sum -= std::pow(L, m + 1) / (m + 1);
  sum -= 0.5 * std::pow(L, m) / xN;

  // f^{(r)}(x) = x^{-1-r} Q_r(log x), Q_0 = L^m, Q_{r+1} = -(1+r) Q_r + Q_r'
  std::vector<double> Q(m + 1, 0.0);
  Q[m] = 1.0;
  auto eval = [&](const std::vector<double>& c) {
    double v = 0.0;
    for (int i = m; i >= 0; --i) v = v * L + c[i];
    return v;
  };
  for (int r = 0; r < 2 * p; ++r) {
    std::vector<double> next(m + 1, 0.0);
    for (int i = 0; i <= m; ++i) {
      next[i] -= (1.0 + r) * Q[i];
      if (i + 1 <= m) next[i] += (i + 1) * Q[i + 1];
    }
    Q = std::move(next);
    int order = r + 1;
    if (order % 2 == 1) {
      int i = (order + 1) / 2;
      sum -= bf[i] * std::pow(xN, -1.0 - order) * eval(Q);
    }
  }
  return sum;
}

const StieltjesSet& stieltjes() {
  static const StieltjesSet g = [] {
    StieltjesSet v;
    v.gamma0 = stieltjes_constant(0);
    v.gamma1 = stieltjes_constant(1);
    v.gamma2 = stieltjes_constant(2);
    if (std::abs(v.gamma0 - 0.5772156649) >= 1e-9) {
      throw NumericFailure("Euler constant self-check failed");
    }
    return v;
  }();
  return g;
}

ZetaTaylor zeta_taylor(const StieltjesSet& g) { return {g.gamma0, -g.gamma1, 0.5 * g.gamma2}; }

namespace {

// Stirling coefficients B_{2k} / (2k (2k-1)).
constexpr std::array<double, 9> kStirling = {
    1.0 / 12.0,         -1.0 / 360.0,        1.0 / 1260.0,
    -1.0 / 1680.0,      1.0 / 1188.0,        -691.0 / 360360.0,
    1.0 / 156.0,        -3617.0 / 122400.0,  43867.0 / 244188.0,
};

// B_{2k} / (2k).
constexpr std::array<double, 9> kDigamma = {
    1.0 / 12.0,      -1.0 / 120.0,      1.0 / 252.0,
    -1.0 / 240.0,    1.0 / 132.0,       -691.0 / 32760.0,
    1.0 / 12.0,      -3617.0 / 8160.0,  43867.0 / 14364.0,
};

template <class T>
T stirling_tail(T z) {
  T z2 = 1.0 / (z * z);
  T pw = 1.0 / z;
  T sum = 0.0;
  for (double c : kStirling) {
    sum += c * pw;
    pw *= z2;
  }
  return sum;
}

}  // namespace

double log_gamma(double a) {
  if (!(a > 0.0)) throw DomainError("log_gamma requires a > 0");
  double shift = 0.0;
  while (a < 12.0) {
    shift += std::log(a);
    a += 1.0;
  }
  return (a - 0.5) * std::log(a) - a + 0.5 * std::log(2.0 * kPi) + stirling_tail(a) - shift;
}

cplx log_gamma(cplx z) {
  if (near_nonpositive_integer(z)) throw PoleOfGamma("Gamma pole at a nonpositive integer");
  cplx shift = 0.0;
  while (z.real() < 12.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + stirling_tail(z) - shift;
}

cplx digamma(cplx z) {
  if (near_nonpositive_integer(z)) throw PoleAtNonpositiveInteger("digamma pole");
  cplx shift = 0.0;
  while (z.real() < 12.0) {
    shift += 1.0 / z;
    z += 1.0;
  }
  cplx z2 = 1.0 / (z * z);
  cplx pw = z2;
  cplx sum = std::log(z) - 0.5 / z;
  for (double c : kDigamma) {
    sum -= c * pw;
    pw *= z2;
  }
  return sum - shift;
}

namespace {

cplx chi_common(cplx s, bool use_sin) {
  cplx one_minus = 1.0 - s;
  if (near_nonpositive_integer(one_minus)) throw PoleOfGamma("Gamma(1-s) pole");
  cplx lg = log_gamma(one_minus);
  cplx trig = use_sin ? std::sin(0.5 * kPi * s) : std::cos(0.5 * kPi * s);
  return 2.0 * std::exp((s - 1.0) * std::log(2.0 * kPi) + lg) * trig;
}

}  // namespace

cplx chi(cplx s) { return chi_common(s, true); }
cplx chi1(cplx s) { return chi_common(s, false); }

}  // namespace wdiv
