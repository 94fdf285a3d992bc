#include <cmath>
#include <numbers>
#include <string>

#include "wdiv/errors.hpp"
#include "wdiv/special.hpp"

namespace wdiv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEuler = std::numbers::egamma;
constexpr double kYSwitch = 12.0;
constexpr double kKSwitch = 2.0;

void check_args(int order, double x) {
  if (!(x > 0.0)) throw DomainError("Bessel argument must be positive");
  if (order < 0 || order > 12) throw DomainError("Bessel order must be in [0, 12]");
}

// Y0, Y1 by the ascending series.
void y01_series(double x, double& y0, double& y1) {
  const double q = 0.25 * x * x;
  const double lg = std::log(0.5 * x);
  double j0 = 0.0, j1 = 0.0, s0 = 0.0, s1 = 0.0;
  double t0 = 1.0;        // (-q)^k / (k!)^2
  double t1 = 0.5 * x;    // (-1)^k (x/2)^{2k+1} / (k! (k+1)!)
  double hk = 0.0;        // H_k
  for (int k = 0; k < 200; ++k) {
    double hk1 = hk + 1.0 / (k + 1);
    j0 += t0;
    j1 += t1;
    s0 += (k > 0 ? hk : 0.0) * t0;
    s1 += (hk + hk1 - 2.0 * kEuler) * t1;
    if (std::abs(t0) < 1e-18 * std::abs(j0) && std::abs(t1) < 1e-18 * std::abs(j1) && k > 2) break;
    t0 *= -q / ((k + 1.0) * (k + 1.0));
    t1 *= -q / ((k + 1.0) * (k + 2.0));
    hk = hk1;
  }
  y0 = 2.0 / kPi * ((lg + kEuler) * j0 - s0);
  y1 = 2.0 / kPi * j1 * lg - 2.0 / (kPi * x) - s1 / kPi;
}

// Hankel expansion for x > kYSwitch.
double y_hankel(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  double P = 0.0, Q = 0.0;
  double term = 1.0;
  double prev = INFINITY;
  for (int k = 0; k < 60; ++k) {
    double mag = std::abs(term);
    if (mag > prev) break;
    if (k % 2 == 0) {
      P += ((k / 2) % 2 == 0 ? 1.0 : -1.0) * term;
    } else {
      Q += (((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0) * term;
    }
    if (mag < 1e-17) break;
    prev = mag;
    double odd = 2.0 * k + 1.0;
    term *= (mu - odd * odd) / ((k + 1.0) * 8.0 * x);
  }
  const double chi = x - (0.5 * nu + 0.25) * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (P * std::sin(chi) + Q * std::cos(chi));
}

void k01_series(double x, double& k0, double& k1) {
  const double q = 0.25 * x * x;
  const double lg = std::log(0.5 * x) + kEuler;
  double i0 = 0.0, i1 = 0.0, s = 0.0;
  double t0 = 1.0, t1 = 0.5 * x, hk = 0.0;
  for (int k = 0; k < 100; ++k) {
    i0 += t0;
    i1 += t1;
    s += hk * t0;
    if (t0 < 1e-18 * i0 && k > 2) break;
    t0 *= q / ((k + 1.0) * (k + 1.0));
    t1 *= q / ((k + 1.0) * (k + 2.0));
    hk += 1.0 / (k + 1);
  }
  k0 = -lg * i0 + s;
  k1 = (1.0 / x - i1 * k0) / i0;
}

// Steed's continued fraction (Temme's CF2) at order 0.
void k01_cf2(double x, double& k0, double& k1) {
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d, delh = d;
  double q1 = 0.0, q2 = 1.0;
  const double a1 = 0.25;
  double q = a1, c = a1, a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < 10000; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < 1e-17) break;
  }
  h *= a1;
  k0 = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
  k1 = k0 * (x + 0.5 - h) / x;
}

}  // namespace

std::vector<double> bessel_Y_upto(int nmax, double x) {
  check_args(nmax, x);
  std::vector<double> y(static_cast<std::size_t>(std::max(nmax, 1)) + 1);
  if (x <= kYSwitch) {
    y01_series(x, y[0], y[1]);
  } else {
    y[0] = y_hankel(0, x);
    y[1] = y_hankel(1, x);
  }
  for (int n = 1; n < nmax; ++n) y[n + 1] = (2.0 * n / x) * y[n] - y[n - 1];
  y.resize(static_cast<std::size_t>(nmax) + 1);
  return y;
}

std::vector<double> bessel_K_upto(int nmax, double x) {
  check_args(nmax, x);
  std::vector<double> k(static_cast<std::size_t>(std::max(nmax, 1)) + 1, 0.0);
  if (x > 700.0) {
    k.resize(static_cast<std::size_t>(nmax) + 1);
    return k;
  }
  if (x <= kKSwitch) {
    k01_series(x, k[0], k[1]);
  } else {
    k01_cf2(x, k[0], k[1]);
  }
  for (int n = 1; n < nmax; ++n) k[n + 1] = (2.0 * n / x) * k[n] + k[n - 1];
  k.resize(static_cast<std::size_t>(nmax) + 1);
  return k;
}

double bessel_Y(int order, double x) { return bessel_Y_upto(order, x)[order]; }
double bessel_K(int order, double x) { return bessel_K_upto(order, x)[order]; }

double bessel_Y_leading(int order, double x) {
  check_args(order, x);
  return std::sqrt(2.0 / (kPi * x)) * std::sin(x - 0.25 * kPi - 0.5 * order * kPi);
}

double bessel_K_leading(int order, double x) {
  check_args(order, x);
  return std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
}

}  // namespace wdiv
