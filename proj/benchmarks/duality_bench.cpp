#include <benchmark/benchmark.h>

#include "banproj/lp_space.hpp"
#include "banproj/random.hpp"

namespace {

using namespace banproj;

void BM_DualityMap(benchmark::State& state) {
  const LpSpace X(static_cast<std::size_t>(state.range(0)), 3.0);
  Rng rng(1);
  const PrimalVector x = random_primal(rng, X.n());
  for (auto _ : state) benchmark::DoNotOptimize(X.duality_map(x));
}
BENCHMARK(BM_DualityMap)->Arg(3)->Arg(64)->Arg(1024);

void BM_InverseDualityMap(benchmark::State& state) {
  const LpSpace X(static_cast<std::size_t>(state.range(0)), 3.0);
  Rng rng(2);
  const DualVector psi = random_dual(rng, X.n());
  for (auto _ : state) benchmark::DoNotOptimize(X.inverse_duality_map(psi));
}
BENCHMARK(BM_InverseDualityMap)->Arg(3)->Arg(64)->Arg(1024);

void BM_Lyapunov(benchmark::State& state) {
  const LpSpace X(static_cast<std::size_t>(state.range(0)), 1.5);
  Rng rng(3);
  const DualVector psi = random_dual(rng, X.n());
  const PrimalVector x = random_primal(rng, X.n());
  for (auto _ : state) benchmark::DoNotOptimize(X.lyapunov(psi, x));
}
BENCHMARK(BM_Lyapunov)->Arg(3)->Arg(64)->Arg(1024);

}  // namespace
