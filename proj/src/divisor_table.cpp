#include "wdiv/divisor_table.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>

#include <unistd.h>

#include "wdiv/errors.hpp"

namespace wdiv {

static_assert(std::endian::native == std::endian::little, "binary table format assumes little endian");

DivisorTable::DivisorTable(std::vector<std::uint32_t> d, std::vector<double> D1, std::vector<double> d01)
    : d_(std::move(d)), D1_(std::move(D1)), d01_(std::move(d01)) {}

double DivisorTable::weight(Weight w, std::uint64_t n) const {
  switch (w) {
    case Weight::d:
      return d_[n];
    case Weight::D1:
      return D1_[n];
    case Weight::d01:
      return d01_[n];
  }
  return 0.0;
}

double DivisorTable::f1(std::uint64_t n) const {
  double ln = std::log(static_cast<double>(n));
  return 0.5 * d_[n] * ln + d01_[n];
}

double DivisorTable::f2(std::uint64_t n) const {
  double ln = std::log(static_cast<double>(n));
  return 0.25 * d_[n] * ln * ln + d01_[n] * ln + D1_[n];
}

namespace {

void check_cap(std::uint64_t xmax, std::uint64_t cap) {
  if (xmax < 1) throw DomainError("xmax must be >= 1");
  if (xmax > cap) {
    throw CapExceeded("xmax " + std::to_string(xmax) + " above cap " + std::to_string(cap));
  }
}

// Neumaier two-term accumulation.
inline void add_comp(double& sum, double& comp, double v) {
  double t = sum + v;
  if (std::abs(sum) >= std::abs(v)) {
    comp += (sum - t) + v;
  } else {
    comp += (v - t) + sum;
  }
  sum = t;
}

struct Scratch {
  std::vector<std::uint32_t> d;
  std::vector<double> D1, D1c, d01, d01c, lg;

  explicit Scratch(std::uint64_t xmax)
      : d(xmax + 1, 0), D1(xmax + 1, 0.0), D1c(xmax + 1, 0.0), d01(xmax + 1, 0.0),
        d01c(xmax + 1, 0.0), lg(xmax + 1, 0.0) {
    for (std::uint64_t n = 1; n <= xmax; ++n) lg[n] = std::log(static_cast<double>(n));
  }

  void segment(std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t e = 1; e <= hi; ++e) {
      const double le = lg[e];
      std::uint64_t q = (lo + e - 1) / e;
      for (std::uint64_t m = q * e; m <= hi; m += e, ++q) {
        ++d[m];
        add_comp(D1[m], D1c[m], le * lg[q]);
        add_comp(d01[m], d01c[m], -le);
      }
    }
  }

  DivisorTable finish() {
    for (std::size_t n = 0; n < D1.size(); ++n) {
      D1[n] += D1c[n];
      d01[n] += d01c[n];
    }
    return DivisorTable(std::move(d), std::move(D1), std::move(d01));
  }
};

}  // namespace

DivisorTable sieve_tables_serial(std::uint64_t xmax, std::uint64_t cap) {
  check_cap(xmax, cap);
  Scratch s(xmax);
  s.segment(1, xmax);
  return s.finish();
}

DivisorTable sieve_tables(std::uint64_t xmax, std::uint64_t cap) {
  check_cap(xmax, cap);
  Scratch s(xmax);
  const std::int64_t parts = std::max(1, omp_get_max_threads()) * 4;
  const std::uint64_t len = (xmax + parts - 1) / parts;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t p = 0; p < parts; ++p) {
    std::uint64_t lo = 1 + static_cast<std::uint64_t>(p) * len;
    std::uint64_t hi = std::min<std::uint64_t>(xmax, lo + len - 1);
    if (lo <= hi) s.segment(lo, hi);
  }
  return s.finish();
}

PointValues point_eval(std::uint64_t n) {
  if (n < 1) throw DomainError("n must be >= 1");
  std::vector<std::pair<std::uint64_t, int>> fac;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) fac.emplace_back(p, e);
  }
  if (m > 1) fac.emplace_back(m, 1);

  std::vector<std::uint64_t> divs{1};
  for (auto [p, e] : fac) {
    std::size_t base = divs.size();
    std::uint64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());

  PointValues v;
  v.d = static_cast<std::uint32_t>(divs.size());
  double ln = std::log(static_cast<double>(n));
  for (auto e : divs) {
    double le = std::log(static_cast<double>(e));
    v.D1 += le * (ln - le);
    v.d01 -= le;
  }
  return v;
}

namespace {

void check_x(const DivisorTable& t, double x) {
  if (!(x <= static_cast<double>(t.xmax()))) {
    throw OutOfRange("x = " + std::to_string(x) + " beyond table xmax " + std::to_string(t.xmax()));
  }
}

}  // namespace

cplx twisted_partial_sum(const DivisorTable& t, Weight w, double x, const RationalPhase& p) {
  check_x(t, x);
  if (x < 1.0) return 0.0;
  RootTable e(p.k);
  const auto top = static_cast<std::uint64_t>(std::floor(x));
  cplx sum = 0.0;
  std::int64_t r = 0;
  for (std::uint64_t n = 1; n <= top; ++n) {
    r += p.h;
    if (r >= p.k) r -= p.k;
    double wn = t.weight(w, n);
    if (n == top && static_cast<double>(top) == x) wn *= 0.5;
    sum += wn * e(r);
  }
  return sum;
}

cplx riesz_sum(const DivisorTable& t, double x, const RationalPhase& p, int a) {
  if (a < 0 || a > 8) throw DomainError("riesz order a must be in [0, 8]");
  if (a == 0) return twisted_partial_sum(t, Weight::D1, x, p);
  check_x(t, x);
  if (x < 1.0) return 0.0;
  RootTable e(p.k);
  double fact = 1.0;
  for (int i = 2; i <= a; ++i) fact *= i;
  const auto top = static_cast<std::uint64_t>(std::floor(x));
  cplx sum = 0.0;
  std::int64_t r = 0;
  for (std::uint64_t n = 1; n <= top; ++n) {
    r += p.h;
    if (r >= p.k) r -= p.k;
    double gap = x - static_cast<double>(n);
    double pw = 1.0;
    for (int i = 0; i < a; ++i) pw *= gap;
    sum += t.D1(n) * pw * e(r);
  }
  return sum / fact;
}

void write_csv(std::ostream& os, const DivisorTable& t) {
  os << "n,d,D1,d01\n" << std::setprecision(17);
  for (std::uint64_t n = 1; n <= t.xmax(); ++n) {
    os << n << ',' << t.d(n) << ',' << t.D1(n) << ',' << t.d01(n) << '\n';
  }
}

namespace {

constexpr char kMagic[5] = {'W', 'D', 'I', 'V', '1'};

}  // namespace

void save_binary(const std::filesystem::path& path, const DivisorTable& t) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DomainError("cannot write " + path.string());
  std::uint64_t xmax = t.xmax();
  os.write(kMagic, sizeof kMagic);
  os.write(reinterpret_cast<const char*>(&xmax), sizeof xmax);
  os.write(reinterpret_cast<const char*>(t.d_array().data() + 1), static_cast<std::streamsize>(xmax * 4));
  os.write(reinterpret_cast<const char*>(t.D1_array().data() + 1), static_cast<std::streamsize>(xmax * 8));
  os.write(reinterpret_cast<const char*>(t.d01_array().data() + 1), static_cast<std::streamsize>(xmax * 8));
  if (!os) throw DomainError("short write to " + path.string());
}

DivisorTable load_binary(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DomainError("cannot read " + path.string());
  char magic[5];
  std::uint64_t xmax = 0;
  is.read(magic, sizeof magic);
  is.read(reinterpret_cast<char*>(&xmax), sizeof xmax);
  if (!is || std::memcmp(magic, kMagic, sizeof magic) != 0) {
    throw DomainError("bad table header in " + path.string());
  }
  if (xmax > kDefaultSieveCap * 100) throw DomainError("implausible xmax in " + path.string());
  std::vector<std::uint32_t> d(xmax + 1, 0);
  std::vector<double> D1(xmax + 1, 0.0), d01(xmax + 1, 0.0);
  is.read(reinterpret_cast<char*>(d.data() + 1), static_cast<std::streamsize>(xmax * 4));
  is.read(reinterpret_cast<char*>(D1.data() + 1), static_cast<std::streamsize>(xmax * 8));
  is.read(reinterpret_cast<char*>(d01.data() + 1), static_cast<std::streamsize>(xmax * 8));
  if (!is) throw DomainError("truncated table " + path.string());
  return DivisorTable(std::move(d), std::move(D1), std::move(d01));
}

DivisorTable cached_table(std::uint64_t xmax, std::uint64_t cap) {
  const char* dir = std::getenv("WDIV_TABLE_CACHE");
  if (!dir || !*dir) return sieve_tables(xmax, cap);
  check_cap(xmax, cap);
  namespace fs = std::filesystem;
  fs::path file = fs::path(dir) / ("divisors_" + std::to_string(xmax) + ".bin");
  std::error_code ec;
  if (fs::exists(file, ec)) {
    try {
      auto t = load_binary(file);
      if (t.xmax() == xmax) return t;
    } catch (const Error&) {
    }
  }
  auto t = sieve_tables(xmax, cap);
  fs::create_directories(dir, ec);
  fs::path tmp = file;
  tmp += ".tmp" + std::to_string(::getpid());
  try {
    save_binary(tmp, t);
    fs::rename(tmp, file, ec);
  } catch (const Error&) {
  }
  fs::remove(tmp, ec);
  return t;
}

}  // namespace wdiv
