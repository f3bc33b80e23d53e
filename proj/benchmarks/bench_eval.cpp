#include <benchmark/benchmark.h>

#include "aot/enumerate.hpp"
#include "aot/logic.hpp"

namespace {

void BM_EvalPartialFunction(benchmark::State& state) {
  aot::Universe u(aot::numbered_particulars(2), aot::Bounds{static_cast<std::size_t>(state.range(0)), 3});
  aot::saturate(u);
  const aot::Model m(u);
  const auto f =
      aot::parse_formula("forall a:A. forall s:S. forall p:P. forall q:P. (Val(a,s,p) & Val(a,s,q)) -> p = q");
  for (auto _ : state) benchmark::DoNotOptimize(aot::eval(m, f));
  state.counters["objects"] = static_cast<double>(m.objects().size());
  state.counters["states"] = static_cast<double>(m.states().size());
}
BENCHMARK(BM_EvalPartialFunction)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Parse(benchmark::State& state) {
  const std::string text =
      "forall a:A. forall b:A. (forall s:S. forall p:P. Val(a,s,p) <-> Val(b,s,p)) -> a = b";
  for (auto _ : state) benchmark::DoNotOptimize(aot::parse_formula(text));
}
BENCHMARK(BM_Parse);

}  // namespace
