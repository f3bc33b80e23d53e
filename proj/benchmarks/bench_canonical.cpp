#include <benchmark/benchmark.h>

#include "aot/canonical.hpp"
#include "aot/enumerate.hpp"

namespace {

void BM_CanonicalDiagonal(benchmark::State& state) {
  const auto o = aot::diagonal_system(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(aot::canonical_form(o));
}
BENCHMARK(BM_CanonicalDiagonal)->DenseRange(2, 8);

void BM_CanonicalWideAlphabet(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::vector<aot::Row> rows;
  for (std::size_t r = 0; r < k; ++r) {
    aot::Row row;
    for (std::size_t c = 0; c < k; ++c) row.emplace_back(std::to_string((r * 7 + c * 3) % 11));
    rows.push_back(std::move(row));
  }
  const auto o = aot::validate_pos(std::move(rows));
  for (auto _ : state) benchmark::DoNotOptimize(aot::canonical_form(o));
}
BENCHMARK(BM_CanonicalWideAlphabet)->DenseRange(3, 7);

}  // namespace
