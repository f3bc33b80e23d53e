#include <benchmark/benchmark.h>

#include "aot/enumerate.hpp"

namespace {

void count_with(benchmark::State& state, aot::EnumerationStrategy strategy) {
  aot::EnumerateOptions options;
  options.strategy = strategy;
  const auto p = aot::numbered_particulars(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(aot::count_systems(p, n, options));
}

void BM_CountOrderly(benchmark::State& state) { count_with(state, aot::EnumerationStrategy::orderly); }
void BM_CountDedup(benchmark::State& state) { count_with(state, aot::EnumerationStrategy::dedup); }
BENCHMARK(BM_CountOrderly)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountDedup)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_EnumerateJobs(benchmark::State& state) {
  aot::EnumerateOptions options;
  options.jobs = static_cast<std::size_t>(state.range(0));
  const auto p = aot::numbered_particulars(3);
  for (auto _ : state) benchmark::DoNotOptimize(aot::enumerate_systems(p, aot::Bounds{2, 5}, options));
}
BENCHMARK(BM_EnumerateJobs)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
