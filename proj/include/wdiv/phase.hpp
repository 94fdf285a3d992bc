#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace wdiv {

using cplx = std::complex<double>;

// Reduced rational h/k with the inverse of h mod k.
struct RationalPhase {
  std::int64_t h = 1;
  std::int64_t k = 1;
  std::int64_t h_inv = 1;

  bool operator==(const RationalPhase&) const = default;
};

RationalPhase make_phase(std::int64_t h, std::int64_t k);

// (k-h)/k; identity when k = 1.
RationalPhase conjugate(const RationalPhase& p);

// hbar/k and -hbar/k, the reflected twists of the functional equation.
RationalPhase reflected(const RationalPhase& p, int sign);

// e_k(m) = exp(2 pi i m / k) tabulated by angle for m mod k.
class RootTable {
 public:
  explicit RootTable(std::int64_t k);
  std::int64_t k() const { return k_; }
  cplx operator()(std::int64_t m) const {
    std::int64_t r = m % k_;
    if (r < 0) r += k_;
    return roots_[static_cast<std::size_t>(r)];
  }

 private:
  std::int64_t k_;
  std::vector<cplx> roots_;
};

}  // namespace wdiv
