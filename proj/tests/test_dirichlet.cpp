#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wdiv/dirichlet.hpp"
#include "wdiv/errors.hpp"

using namespace wdiv;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

const DivisorTable& table() {
  static const DivisorTable t = sieve_tables(100000);
  return t;
}

cplx zeta_prime(cplx s) {
  double h = 1e-5;
  return (oracle::riemann_zeta(s + h) - oracle::riemann_zeta(s - h)) / (2.0 * h);
}

}  // namespace

TEST_SUITE("dirichlet") {

TEST_CASE("untwisted values are products of zeta and its derivative") {
  auto one = make_phase(1, 1);
  double zp2 = oracle::riemann_zeta_prime(2.0).real();
  CHECK(F_hurwitz(2.0, one).real() == doctest::Approx(zp2 * zp2).epsilon(1e-12));
  CHECK(std::abs(F_hurwitz(2.0, one).real() - 0.878996729170686) < 1e-12);
  for (cplx s : {cplx(2.0, 0.0), cplx(3.0, 5.0), cplx(0.5, 10.0)}) {
    cplx z = oracle::riemann_zeta(s), zp = zeta_prime(s);
    auto v = twisted_hurwitz(s, one);
    CHECK(rel(v.E, z * z) < 1e-9);
    CHECK(rel(v.F0, z * zp) < 1e-8);
    CHECK(rel(v.F, zp * zp) < 1e-8);
  }
}

TEST_CASE("twist by 1/2 through odd-part zeta") {
  auto half = make_phase(1, 2);
  for (cplx s : {cplx(2.0, 0.0), cplx(2.5, 3.0), cplx(4.0, -8.0)}) {
    cplx z = oracle::riemann_zeta(s), zp = zeta_prime(s);
    cplx q = std::pow(2.0, -s);
    cplx zo = (1.0 - q) * z;
    cplx zop = std::log(2.0) * q * z + (1.0 - q) * zp;
    // (-1)^{mn} is -1 exactly when m and n are odd
    CHECK(rel(E_hurwitz(s, half), z * z - 2.0 * zo * zo) < 1e-8);
    CHECK(rel(F0_hurwitz(s, half), z * zp - 2.0 * zo * zop) < 1e-8);
    CHECK(rel(F_hurwitz(s, half), zp * zp - 2.0 * zop * zop) < 1e-8);
  }
}

TEST_CASE("series and hurwitz agree within the tail bound") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> re(2.0, 6.0), im(-30.0, 30.0);
  std::uniform_int_distribution<int> kk(1, 12);
  for (int i = 0; i < 15; ++i) {
    int k = kk(rng), h = 1;
    std::uniform_int_distribution<int> hh(1, k);
    do h = hh(rng); while (std::gcd(h, k) != 1);
    auto p = make_phase(h, k);
    cplx s(re(rng), im(rng));
    auto v = twisted_hurwitz(s, p);
    auto F = F_series(s, p, table());
    auto E = E_series(s, p, table());
    auto F0 = F0_series(s, p, table());
    CHECK(F.tail.cutoff == 100000);
    CHECK(std::abs(F.value - v.F) <= F.tail.tail_bound + 1e-12);
    CHECK(std::abs(E.value - v.E) <= E.tail.tail_bound + 1e-12);
    CHECK(std::abs(F0.value - v.F0) <= F0.tail.tail_bound + 1e-12);
  }
}

TEST_CASE("conjugate twist conjugates values") {
  for (auto [h, k] : {std::pair{1, 3}, {2, 5}, {5, 12}}) {
    auto p = make_phase(h, k);
    auto c = conjugate(p);
    for (cplx s : {cplx(2.5, 1.0), cplx(-1.5, 4.0), cplx(0.3, -7.0)}) {
      CHECK(rel(F_hurwitz(std::conj(s), c), std::conj(F_hurwitz(s, p))) < 1e-12);
    }
  }
  // k = 1 and k = 2 are real on the real axis
  CHECK(std::abs(F_hurwitz(3.0, make_phase(1, 2)).imag()) < 1e-14);
  CHECK(std::abs(F_at_zero(make_phase(1, 2)).imag()) < 1e-14);
}

TEST_CASE("fourth-order pole at s = 1") {
  for (int k : {1, 2, 3, 7}) {
    auto p = make_phase(1, k);
    auto c = laurent_derived(p);
    for (double th : {0.3, 1.7, 4.0}) {
      cplx u = std::polar(1e-2, th);
      cplx lhs = std::pow(u, 4) * F_hurwitz(1.0 + u, p);
      cplx rhs = c.c_m4 + c.c_m3 * u + c.c_m2 * u * u + c.c_m1 * u * u * u;
      CHECK(std::abs(lhs - rhs) < 1e-6);
    }
  }
  CHECK_THROWS_AS(F_hurwitz(1.0, make_phase(1, 3)), PoleAt1);
}

TEST_CASE("contour fit matches the derived principal part") {
  for (int k : {1, 2, 3, 5, 12}) {
    for (int h = 1; h < std::max(2, k); ++h) {
      if (std::gcd(h, k) != 1) continue;
      auto p = make_phase(h, k);
      auto fit = laurent_fit(p);
      auto d = laurent_derived(p);
      CHECK(std::abs(fit.c_m4 - d.c_m4) < 1e-10);
      CHECK(std::abs(fit.c_m3 - d.c_m3) < 1e-10);
      CHECK(std::abs(fit.c_m2 - d.c_m2) < 1e-10);
      CHECK(std::abs(fit.c_m1 - d.c_m1) < 1e-10);
    }
  }
}

TEST_CASE("printed principal part") {
  auto one = laurent_at_1(make_phase(1, 1));
  auto d = laurent_derived(make_phase(1, 1));
  CHECK(one.c_m4 == d.c_m4);
  CHECK(one.c_m3 == 0.0);
  CHECK(one.c_m2 == doctest::Approx(d.c_m2).epsilon(1e-15));
  CHECK(one.c_m1 == doctest::Approx(d.c_m1).epsilon(1e-15));
  auto two = laurent_at_1(make_phase(1, 2));
  CHECK(two.c_m4 == 0.5);
  CHECK(two.c_m3 == doctest::Approx(std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("value at zero") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> kk(1, 50);
  for (int i = 0; i < 20; ++i) {
    int k = kk(rng), h = 1;
    std::uniform_int_distribution<int> hh(1, k);
    do h = hh(rng); while (std::gcd(h, k) != 1);
    auto p = make_phase(h, k);
    CHECK(std::abs(F_at_zero(p) - F_hurwitz(0.0, p)) < 1e-9);
  }
  // zeta'(0)^2 = log^2(2 pi) / 4
  double l = std::log(2.0 * oracle::pi);
  CHECK(F_at_zero(make_phase(1, 1)).real() == doctest::Approx(0.25 * l * l).epsilon(1e-13));
}

TEST_CASE("values at negative integers") {
  auto one = make_phase(1, 1);
  const double glaisher = 1.28242712910062263687;
  double zp1 = 1.0 / 12.0 - std::log(glaisher);
  CHECK(F_at_negative(1, one).real() == doctest::Approx(zp1 * zp1).epsilon(1e-10));
  const double zeta3 = 1.2020569031595942854;
  double zp2 = -zeta3 / (4.0 * oracle::pi * oracle::pi);
  CHECK(F_at_negative(2, one).real() == doctest::Approx(zp2 * zp2).epsilon(1e-10));
  CHECK(F_at_negative(0, one) == F_hurwitz(0.0, one));
  CHECK_THROWS_AS(F_at_negative(9, one), DomainError);
}

TEST_CASE("functional equation") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> re(-3.0, -1.0), im(-10.0, 10.0);
  std::uniform_int_distribution<int> kk(1, 8);
  for (int i = 0; i < 20; ++i) {
    int k = kk(rng), h = 1;
    std::uniform_int_distribution<int> hh(1, k);
    do h = hh(rng); while (std::gcd(h, k) != 1);
    cplx s(re(rng), im(rng));
    CHECK(funceq_residual(s, make_phase(h, k)) < 1e-10);
  }
  // the reflected twist pairs 2/5 with 3/5
  CHECK(reflected(make_phase(2, 5), 1).h == 3);
  CHECK(funceq_residual(-2.0, make_phase(2, 5)) < 1e-10);
  CHECK(funceq_residual(-2.0, make_phase(3, 5)) < 1e-10);
  // series evaluation of the right side
  CHECK(funceq_residual(cplx(-2.0, 3.0), make_phase(1, 4), Method::series, &table()) < 1e-6);
  CHECK_THROWS_AS(funceq_residual(0.0, make_phase(1, 3)), DomainError);
  CHECK_THROWS_AS(funceq_rhs(-2.0, make_phase(1, 3), Method::series, nullptr), DomainError);
}

TEST_CASE("series preconditions") {
  CHECK_THROWS_AS(F_series(1.5, make_phase(1, 3), table()), ConvergenceTooSlow);
  auto small = sieve_tables(10);
  auto v = F_series(2.0, make_phase(1, 1), small);
  CHECK(v.tail.cutoff == 10);
  CHECK(std::abs(v.value.real() - 0.878996729170686) <= v.tail.tail_bound);
}

}  // TEST_SUITE
