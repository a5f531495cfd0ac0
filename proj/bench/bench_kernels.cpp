// Serial reference vs OpenMP kernel, pairwise. Run with OMP_NUM_THREADS to vary.

#include "lgal/laguerre.hpp"
#include "lgal/modp.hpp"
#include "lgal/pipeline.hpp"
#include "lgal/primes.hpp"
#include "lgal/scans.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace lgal;

void BM_SegmentedSieve_Serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(segmented_primes_serial(0, static_cast<std::uint64_t>(state.range(0))));
}
void BM_SegmentedSieve_OpenMP(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(segmented_primes(0, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_SegmentedSieve_Serial)->Arg(1 << 22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SegmentedSieve_OpenMP)->Arg(1 << 22)->Unit(benchmark::kMillisecond);

void BM_ShortWindowScan_Serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(short_window_scan_serial(14, state.range(0)));
}
void BM_ShortWindowScan_OpenMP(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(short_window_scan(14, state.range(0)));
}
BENCHMARK(BM_ShortWindowScan_Serial)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShortWindowScan_OpenMP)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_GrowthWindowScan_Serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(growth_window_scan_serial(887, state.range(0)));
}
void BM_GrowthWindowScan_OpenMP(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(growth_window_scan(887, state.range(0)));
}
BENCHMARK(BM_GrowthWindowScan_Serial)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GrowthWindowScan_OpenMP)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_ClassificationTable_Serial(benchmark::State& state) {
  const TableRequest req{state.range(0), -18, -2};
  for (auto _ : state) benchmark::DoNotOptimize(classification_table_serial(req));
}
void BM_ClassificationTable_OpenMP(benchmark::State& state) {
  const TableRequest req{state.range(0), -18, -2};
  for (auto _ : state) benchmark::DoNotOptimize(classification_table(req));
}
BENCHMARK(BM_ClassificationTable_Serial)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassificationTable_OpenMP)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_FrobeniusSample_Serial(benchmark::State& state) {
  const IntPolynomial f = curly_l(LaguerreParams(state.range(0), -7));
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_sample_serial(f, 200));
}
void BM_FrobeniusSample_OpenMP(benchmark::State& state) {
  const IntPolynomial f = curly_l(LaguerreParams(state.range(0), -7));
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_sample(f, 200));
}
BENCHMARK(BM_FrobeniusSample_Serial)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrobeniusSample_OpenMP)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
