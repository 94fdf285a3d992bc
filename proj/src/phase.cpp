#include "wdiv/phase.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "wdiv/errors.hpp"

namespace wdiv {

namespace {

std::int64_t inverse_mod(std::int64_t h, std::int64_t k) {
  std::int64_t r0 = k, r1 = h, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  t0 %= k;
  if (t0 <= 0) t0 += k;
  return t0;
}

}  // namespace

RationalPhase make_phase(std::int64_t h, std::int64_t k) {
  if (k < 1) throw DomainError("k must be positive, got " + std::to_string(k));
  std::int64_t r = h % k;
  if (r <= 0) r += k;
  if (std::gcd(r, k) != 1) {
    throw NonCoprime("gcd(" + std::to_string(h) + ", " + std::to_string(k) + ") > 1");
  }
  RationalPhase p;
  p.h = r;
  p.k = k;
  p.h_inv = k == 1 ? 1 : inverse_mod(r, k);
  return p;
}

RationalPhase conjugate(const RationalPhase& p) { return make_phase(p.k - p.h, p.k); }

RationalPhase reflected(const RationalPhase& p, int sign) {
  return make_phase(sign >= 0 ? p.h_inv : p.k - p.h_inv, p.k);
}

RootTable::RootTable(std::int64_t k) : k_(k), roots_(static_cast<std::size_t>(k)) {
  for (std::int64_t j = 0; j < k; ++j) {
    // reduce to the nearest angle in [-pi, pi] before sincos
    std::int64_t m = 2 * j <= k ? j : j - k;
    double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(k);
    if (4 * m == k) {
      roots_[j] = {0.0, 1.0};
    } else if (4 * m == -k) {
      roots_[j] = {0.0, -1.0};
    } else if (2 * m == k || 2 * m == -k) {
      roots_[j] = {-1.0, 0.0};
    } else {
      roots_[j] = {std::cos(theta), std::sin(theta)};
    }
  }
}

}  // namespace wdiv
