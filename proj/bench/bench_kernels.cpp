// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "cornersearch/circle_strategy.hpp"
#include "cornersearch/global_optimizer.hpp"

namespace {

using namespace cornersearch;

void BM_RatioCurveParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ratio_curve(0.1, 10.0, state.range(0)));
}

void BM_RatioCurveSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ratio_curve_serial(0.1, 10.0, state.range(0)));
}

void BM_GlobalOptimizeParallel(benchmark::State& state) {
  const auto seeds = restart_seeds(state.range(0), 0);
  for (auto _ : state) benchmark::DoNotOptimize(global_optimize(4.4, 3, seeds));
}

void BM_GlobalOptimizeSerial(benchmark::State& state) {
  const auto seeds = restart_seeds(state.range(0), 0);
  for (auto _ : state) benchmark::DoNotOptimize(global_optimize_serial(4.4, 3, seeds));
}

}  // namespace

BENCHMARK(BM_RatioCurveParallel)->Arg(991)->Arg(10001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RatioCurveSerial)->Arg(991)->Arg(10001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GlobalOptimizeParallel)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GlobalOptimizeSerial)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
