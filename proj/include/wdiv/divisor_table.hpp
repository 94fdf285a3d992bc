#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "wdiv/phase.hpp"

namespace wdiv {

inline constexpr std::uint64_t kDefaultSieveCap = 10'000'000;

enum class Weight { d, D1, d01 };

// d(n), D1(n) = sum_{e|n} log e log(n/e), d01(n) = -sum_{e|n} log e for 1 <= n <= xmax.
// About 20 bytes per entry once built; construction needs ~24 more as scratch.
class DivisorTable {
 public:
  DivisorTable() = default;
  DivisorTable(std::vector<std::uint32_t> d, std::vector<double> D1, std::vector<double> d01);

  std::uint64_t xmax() const { return d_.empty() ? 0 : d_.size() - 1; }
  std::uint32_t d(std::uint64_t n) const { return d_[n]; }
  double D1(std::uint64_t n) const { return D1_[n]; }
  double d01(std::uint64_t n) const { return d01_[n]; }
  double weight(Weight w, std::uint64_t n) const;

  double f1(std::uint64_t n) const;
  double f2(std::uint64_t n) const;

  const std::vector<std::uint32_t>& d_array() const { return d_; }
  const std::vector<double>& D1_array() const { return D1_; }
  const std::vector<double>& d01_array() const { return d01_; }

 private:
  std::vector<std::uint32_t> d_;
  std::vector<double> D1_;
  std::vector<double> d01_;
};

// Partitioned OpenMP sieve. Each n accumulates its divisors in increasing order,
// so the result is bitwise identical to the serial sieve.
DivisorTable sieve_tables(std::uint64_t xmax, std::uint64_t cap = kDefaultSieveCap);
DivisorTable sieve_tables_serial(std::uint64_t xmax, std::uint64_t cap = kDefaultSieveCap);

struct PointValues {
  std::uint32_t d = 0;
  double D1 = 0.0;
  double d01 = 0.0;
};

// Trial-division factorization and full divisor enumeration.
PointValues point_eval(std::uint64_t n);

// sum' over n <= x of w(n) e(nh/k); the term n = x is halved when x is an integer.
cplx twisted_partial_sum(const DivisorTable& t, Weight w, double x, const RationalPhase& p);

// (1/a!) sum' over n <= x of D1(n) e(nh/k) (x-n)^a.
cplx riesz_sum(const DivisorTable& t, double x, const RationalPhase& p, int a);

void write_csv(std::ostream& os, const DivisorTable& t);
void save_binary(const std::filesystem::path& path, const DivisorTable& t);
DivisorTable load_binary(const std::filesystem::path& path);

// Sieve through the WDIV_TABLE_CACHE directory when set; a cached file is reused
// only for the same xmax.
DivisorTable cached_table(std::uint64_t xmax, std::uint64_t cap = kDefaultSieveCap);

}  // namespace wdiv
