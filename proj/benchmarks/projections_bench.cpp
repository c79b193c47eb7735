#include <benchmark/benchmark.h>

#include "banproj/projections.hpp"
#include "banproj/random.hpp"

namespace {

using namespace banproj;

const PrimalVector kY{25.0, 37.0, 77.0};

void BM_MetricProjectSegment(benchmark::State& state) {
  const LpSpace X(3, 3.0);
  const auto C = ConvexSet::segment(PrimalVector::zeros(3), kY);
  const PrimalVector h{26.0 + 2.0 / 3.0, 34.666666666666664, 76.0};
  for (auto _ : state) benchmark::DoNotOptimize(metric_project(X, C, h));
}
BENCHMARK(BM_MetricProjectSegment);

void BM_GeneralizedProjectRay(benchmark::State& state) {
  const LpSpace X(3, 1.5);
  const auto C = ConvexSet::ray(PrimalVector{1.0, 0.0, 0.0}, PrimalVector{1.0, 1.0, 1.0});
  const DualVector psi{-2.0, 3.0, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(generalized_project(X, C, psi));
}
BENCHMARK(BM_GeneralizedProjectRay);

// range(0) = number of hull vertices, range(1) = 1 for p = 2 (exact path)
void BM_ProjectPolytope(benchmark::State& state) {
  const LpSpace X(5, state.range(1) ? 2.0 : 3.0);
  Rng rng(4);
  std::vector<PrimalVector> vs;
  for (int i = 0; i < state.range(0); ++i) vs.push_back(random_primal(rng, X.n()));
  const auto C = ConvexSet::polytope(std::move(vs));
  const PrimalVector x = random_primal(rng, X.n(), 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(generalized_metric_project(X, C, x));
}
BENCHMARK(BM_ProjectPolytope)->Args({4, 0})->Args({16, 0})->Args({4, 1})->Args({16, 1});

}  // namespace
