// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "dihedrant/analysis.hpp"
#include "dihedrant/functionals.hpp"
#include "dihedrant/random.hpp"

namespace {

dih::ExactMatrix bench_matrix(int n) {
  dih::Rng rng(1, 0, static_cast<std::uint64_t>(n));
  return dih::random_int_matrix(rng, n, -9, 9);
}

void BM_LeibnizParallel(benchmark::State& state) {
  const auto a = bench_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dih::leibniz_det(a));
}

void BM_LeibnizSerial(benchmark::State& state) {
  const auto a = bench_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dih::serial::leibniz_det(a));
}

void BM_EliminationDet(benchmark::State& state) {
  const auto a = bench_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dih::elimination_det(a));
}

void BM_Dihedrant(benchmark::State& state) {
  const auto a = bench_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dih::dihedrant(a));
}

dih::SearchConfig bench_search() {
  dih::SearchConfig cfg;
  cfg.n = 4;
  cfg.lo = -2;
  cfg.hi = 2;
  cfg.sample_count = 20000;
  return cfg;
}

void BM_SearchParallel(benchmark::State& state) {
  const auto cfg = bench_search();
  for (auto _ : state) benchmark::DoNotOptimize(dih::search_dih_equals_det(cfg));
}

void BM_SearchSerial(benchmark::State& state) {
  const auto cfg = bench_search();
  for (auto _ : state) benchmark::DoNotOptimize(dih::serial::search_dih_equals_det(cfg));
}

}  // namespace

BENCHMARK(BM_LeibnizParallel)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LeibnizSerial)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EliminationDet)->DenseRange(6, 9)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Dihedrant)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SearchParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
