#pragma once

#include <cstdint>

#include "wdiv/divisor_table.hpp"
#include "wdiv/phase.hpp"
#include "wdiv/special.hpp"

namespace wdiv {

// Principal part of F(s, h/k) at s = 1: sum_j c_{-j} (s-1)^{-j}.
struct LaurentData {
  double c_m4 = 0.0;
  double c_m3 = 0.0;
  double c_m2 = 0.0;
  double c_m1 = 0.0;
};

struct SeriesTail {
  std::uint64_t cutoff = 0;
  double tail_bound = 0.0;
};

struct SeriesValue {
  cplx value;
  SeriesTail tail;
};

// F = sum D1(n) e(nh/k) n^-s, E = sum d(n) e(nh/k) n^-s, F0 = sum d01(n) e(nh/k) n^-s,
// continued through Hurwitz zeta values at alpha/k.
struct TwistedValues {
  cplx F;
  cplx E;
  cplx F0;
};

TwistedValues twisted_hurwitz(cplx s, const RationalPhase& p);
cplx F_hurwitz(cplx s, const RationalPhase& p);
cplx E_hurwitz(cplx s, const RationalPhase& p);
cplx F0_hurwitz(cplx s, const RationalPhase& p);

// Partial sums over the whole table with a proven tail bound. Re s >= 2.
SeriesValue F_series(cplx s, const RationalPhase& p, const DivisorTable& t);
SeriesValue E_series(cplx s, const RationalPhase& p, const DivisorTable& t);
SeriesValue F0_series(cplx s, const RationalPhase& p, const DivisorTable& t);

// Closed form as printed; gamma1, gamma2 enter as Taylor coefficients of zeta at 1.
LaurentData laurent_at_1(const RationalPhase& p);
// Closed form including the expansion of k^{-2s}.
LaurentData laurent_derived(const RationalPhase& p);
// Trapezoid rule for (1/2 pi i) \oint F(s) (s-1)^{j-1} ds on |s-1| = radius.
LaurentData laurent_fit(const RationalPhase& p, double radius = 0.05, int nodes = 64);

cplx F_at_zero(const RationalPhase& p);
cplx F_at_negative(int n, const RationalPhase& p);

enum class Method { hurwitz, series };

// Right side of the alternative functional equation at s, built from F, F0, E
// at 1 - s with twists hbar/k and -hbar/k.
cplx funceq_rhs(cplx s, const RationalPhase& p, Method m = Method::hurwitz,
                const DivisorTable* t = nullptr);

// |LHS - RHS| / (|LHS| + |RHS|) with LHS = F_hurwitz(s). Re s <= -1.
double funceq_residual(cplx s, const RationalPhase& p, Method m = Method::hurwitz,
                       const DivisorTable* t = nullptr);

}  // namespace wdiv
