#include <benchmark/benchmark.h>

#include "wdiv/divisor_table.hpp"
#include "wdiv/meansquare.hpp"
#include "wdiv/voronoi.hpp"

namespace {

const wdiv::DivisorTable& table() {
  static const wdiv::DivisorTable t = wdiv::sieve_tables(100000);
  return t;
}

void BM_SieveSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wdiv::sieve_tables_serial(state.range(0)));
}

void BM_SieveParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wdiv::sieve_tables(state.range(0)));
}

void BM_VoronoiSerial(benchmark::State& state) {
  auto p = wdiv::make_phase(1, 3);
  wdiv::MainTerm main(p, 0);
  auto xs = wdiv::half_integer_grid(1000, 10000, 50);
  for (auto _ : state) benchmark::DoNotOptimize(wdiv::compare_voronoi_serial(xs, p, 0, table(), main));
}

void BM_VoronoiParallel(benchmark::State& state) {
  auto p = wdiv::make_phase(1, 3);
  wdiv::MainTerm main(p, 0);
  auto xs = wdiv::half_integer_grid(1000, 10000, 50);
  for (auto _ : state) benchmark::DoNotOptimize(wdiv::compare_voronoi(xs, p, 0, table(), main));
}

void BM_MeanSquareSerial(benchmark::State& state) {
  wdiv::MainTerm main(wdiv::make_phase(1, 1), 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(wdiv::mean_square_integral_serial(1.0, static_cast<double>(state.range(0)), table(), main));
}

void BM_MeanSquareParallel(benchmark::State& state) {
  wdiv::MainTerm main(wdiv::make_phase(1, 1), 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(wdiv::mean_square_integral(1.0, static_cast<double>(state.range(0)), table(), main));
}

}  // namespace

BENCHMARK(BM_SieveSerial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SieveParallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VoronoiSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VoronoiParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeanSquareSerial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeanSquareParallel)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
