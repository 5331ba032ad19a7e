#include <benchmark/benchmark.h>

#include "pcat/closure.hpp"
#include "pcat/ops.hpp"

using namespace pcat;

namespace {

ClosureConfig config(int cap, int workers) {
  ClosureConfig c;
  c.max_points = cap;
  c.workers = workers;
  return c;
}

void BM_serial(benchmark::State& state) {
  const std::vector<TwoColoredPartition> gens = {crossing_ww()};
  const auto cfg = config(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(bounded_closure_serial(gens, cfg).elements.size());
}

void BM_parallel(benchmark::State& state) {
  const std::vector<TwoColoredPartition> gens = {crossing_ww()};
  const auto cfg = config(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(bounded_closure_parallel(gens, cfg).elements.size());
}

}  // namespace

BENCHMARK(BM_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->Args({4, 1})->Args({6, 1})->Args({6, 2})->Args({6, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
