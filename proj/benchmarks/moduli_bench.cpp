#include <benchmark/benchmark.h>

#include "banproj/moduli.hpp"

namespace {

using namespace banproj;

void BM_ModulusConvexity(benchmark::State& state) {
  const LpSpace X(3, 3.0);
  const SamplingBudget budget{static_cast<std::size_t>(state.range(0)), 100, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(modulus_convexity(X, 1.0, budget));
}
BENCHMARK(BM_ModulusConvexity)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_ModulusSmoothness(benchmark::State& state) {
  const LpSpace X(3, 3.0);
  const SamplingBudget budget{static_cast<std::size_t>(state.range(0)), 100, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(modulus_smoothness(X, 0.5, budget));
}
BENCHMARK(BM_ModulusSmoothness)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_KrConstant(benchmark::State& state) {
  const LpSpace X(3, 3.0);
  const PrimalVector x{28.0, 35.0, 76.0};
  const PrimalVector proj{25.0, 37.0, 77.0};
  const SamplingBudget budget{4000, 100, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(kr_constant(X, x, proj, 1.7, budget));
}
BENCHMARK(BM_KrConstant)->Unit(benchmark::kMillisecond);

}  // namespace
