#pragma once

#include <complex>
#include <vector>

#include "wdiv/phase.hpp"

namespace wdiv {

struct HurwitzPair {
  cplx value;       // zeta(s, a)
  cplx derivative;  // d/ds zeta(s, a)
};

// Euler-Maclaurin with an adaptive shift; both outputs share one pass.
// Box: -10 <= Re s <= 30, |Im s| <= 100, a > 0.
HurwitzPair hurwitz_pair(cplx s, double a);
cplx hurwitz_zeta(cplx s, double a);
cplx hurwitz_zeta_ds(cplx s, double a);

// Standard Stieltjes constants: zeta(s) = 1/(s-1) + sum_m (-1)^m gamma_m (s-1)^m / m!.
struct StieltjesSet {
  double gamma0 = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
};

const StieltjesSet& stieltjes();

// gamma_m from the limit formula with N terms and p Euler-Maclaurin corrections.
double stieltjes_constant(int m, int N = 100, int p = 10);

// Taylor coefficients of zeta(s) - 1/(s-1) about s = 1:
// c0 = gamma0, c1 = -gamma1, c2 = gamma2 / 2.
struct ZetaTaylor {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

ZetaTaylor zeta_taylor(const StieltjesSet& g = stieltjes());

double log_gamma(double a);
cplx log_gamma(cplx z);
cplx digamma(cplx z);

// chi(s) = 2 (2 pi)^(s-1) Gamma(1-s) sin(pi s / 2); chi1 uses cos.
cplx chi(cplx s);
cplx chi1(cplx s);

// Integer order, x > 0, order <= 12.
double bessel_Y(int order, double x);
double bessel_K(int order, double x);

// Y_0..Y_nmax and K_0..K_nmax at one argument.
std::vector<double> bessel_Y_upto(int nmax, double x);
std::vector<double> bessel_K_upto(int nmax, double x);

// Leading terms: sqrt(2/(pi x)) sin(x - pi/4 - n pi/2) and sqrt(pi/(2x)) e^{-x}.
double bessel_Y_leading(int order, double x);
double bessel_K_leading(int order, double x);

}  // namespace wdiv
