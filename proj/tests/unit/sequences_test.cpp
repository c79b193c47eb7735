#include <gtest/gtest.h>

#include <cmath>

#include "banproj/sequences.hpp"
#include "support/generators.hpp"

namespace banproj {
namespace {

const LpSpace kX3(3, 3.0);
const PrimalVector kY{25.0, 37.0, 77.0};
const ConvexSet kSeg = ConvexSet::segment(PrimalVector::zeros(3), kY);

TEST(Sequences, PerturbationSchedule) {
  EXPECT_THROW(perturbation_magnitudes(7, 1.0), InvalidArgument);
  const auto m = perturbation_magnitudes(16, 2.0);
  ASSERT_EQ(m.size(), 16u);
  EXPECT_EQ(m.front(), 2.0);
  for (std::size_t k = 1; k < m.size(); ++k) EXPECT_LT(m[k], m[k - 1]);
  EXPECT_NEAR(m[7] / 2.0, 1e-16, 1e-28);
}

TEST(Sequences, PerturbedSequenceConverges) {
  const auto terms = perturbed_sequence(kX3, kY, 4, 12);
  ASSERT_EQ(terms.size(), 12u);
  EXPECT_NEAR(kX3.norm(terms.front() - kY), 0.1 * kX3.norm(kY), 1e-9 * kX3.norm(kY));
  EXPECT_NO_THROW(check_convergence(kX3, kY, std::vector<Query>(terms.begin(), terms.end())));
  EXPECT_EQ(terms, perturbed_sequence(kX3, kY, 4, 12));
  EXPECT_NE(terms, perturbed_sequence(kX3, kY, 5, 12));
}

TEST(Sequences, ConvergenceCheckRejectsDivergentTerms) {
  std::vector<Query> terms;
  for (int k = 0; k < 10; ++k) terms.push_back(PrimalVector{1.0 + k, 0.0, 0.0});
  EXPECT_THROW(check_convergence(kX3, PrimalVector{1.0, 0.0, 0.0}, terms), PreconditionError);
}

TEST(Sequences, DistanceLowerSemicontinuityOnWorkedData) {
  const auto t = lsc_distance_trial(kX3, kSeg, PrimalVector{28.0, 35.0, 76.0}, 0, 16);
  EXPECT_TRUE(t.passed);
  EXPECT_EQ(t.theorem, "3.2");
  EXPECT_NEAR(t.target, std::cbrt(36.0), 1e-9);
  EXPECT_EQ(t.per_term.size(), 16u);
  EXPECT_LE(t.target, t.liminf_proxy + t.slack);
}

TEST(Sequences, DistanceTrialInsideTheSet) {
  const auto t = lsc_distance_trial(kX3, kSeg, 0.5 * kY, 3, 8);
  EXPECT_TRUE(t.passed);
  EXPECT_EQ(t.target, 0.0);
}

TEST(Sequences, GraphClosednessOnConeSequence) {
  // psi_k = Jy + kappa_k (psi0 - Jy) stays in the inverse-image cone of y.
  const DualVector jy = kX3.duality_map(kY);
  const DualVector psi0 = jy + DualVector{3.0, -2.0, -1.0};
  std::vector<Query> duals;
  std::vector<Query> primals;
  for (double kappa : perturbation_magnitudes(16, 1.0)) {
    const DualVector psi = jy + kappa * (psi0 - jy);
    duals.push_back(psi);
    primals.push_back(kX3.inverse_duality_map(psi));
  }
  const auto g = graph_closedness_trial(kX3, ProjectionKind::generalized, kSeg, jy, duals, kY);
  EXPECT_TRUE(g.passed);
  EXPECT_EQ(g.theorem, "3.4");
  const auto m = graph_closedness_trial(kX3, ProjectionKind::generalized_metric, kSeg,
                                        kX3.inverse_duality_map(jy), primals, kY);
  EXPECT_TRUE(m.passed);
  EXPECT_EQ(m.theorem, "3.6");
}

TEST(Sequences, GraphClosednessConstantSequence) {
  const PrimalVector x{1.0, 2.0, 3.0};
  const std::vector<Query> terms(8, Query(x));
  const auto t = graph_closedness_trial(kX3, ProjectionKind::generalized_metric, kSeg, x, terms,
                                        std::nullopt);
  EXPECT_TRUE(t.passed);
  EXPECT_EQ(t.target, 0.0);
}

TEST(Sequences, GraphClosednessPreconditions) {
  const PrimalVector x{1.0, 2.0, 3.0};
  EXPECT_THROW(graph_closedness_trial(kX3, ProjectionKind::metric, kSeg, x, std::nullopt, 8, 0),
               InvalidArgument);
  // y far from the projections of the terms
  EXPECT_THROW(
      graph_closedness_trial(kX3, ProjectionKind::generalized_metric, kSeg, x, kY, 8, 0),
      PreconditionError);
}

TEST(Sequences, KrLiminfOnUnitSegment) {
  const double c = 1.0 / std::cbrt(3.0);
  const PrimalVector y{c, c, c};
  const ConvexSet C = ConvexSet::segment(PrimalVector::zeros(3), y);
  const auto t = kr_liminf_trial(kX3, C, PrimalVector{1.66, 1.0, -1.0}, 1.7, 16, 2);
  EXPECT_TRUE(t.passed);
  ASSERT_TRUE(t.kr.has_value());
  EXPECT_EQ(t.kr->delta.bound_kind, BoundKind::upper_bound_of_inf);
  EXPECT_EQ(t.kr->rho.bound_kind, BoundKind::lower_bound_of_sup);
  EXPECT_LE(t.kr->value, 1.0);
  EXPECT_THROW(kr_liminf_trial(kX3, C, 0.5 * y, 1.7, 16, 2), PreconditionError);
  EXPECT_THROW(kr_liminf_trial(kX3, C, PrimalVector{1.66, 1.0, -1.0}, 0.9, 16, 2),
               InvalidArgument);
}

TEST(Sequences, RandomTrialsPass) {
  Rng rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    const LpSpace X = testing::random_space(rng);
    const ConvexSet C = trial % 2 ? testing::random_segment(rng, X.n())
                                  : testing::random_hull(rng, X.n(), 4);
    const PrimalVector x = testing::random_point(rng, X.n());
    EXPECT_TRUE(lsc_distance_trial(X, C, x, trial, 12).passed);
    EXPECT_TRUE(graph_closedness_trial(X, ProjectionKind::generalized_metric, C, x, std::nullopt,
                                       12, trial)
                    .passed);
    EXPECT_TRUE(graph_closedness_trial(X, ProjectionKind::generalized, C, X.duality_map(x),
                                       std::nullopt, 12, trial)
                    .passed);
  }
}

}  // namespace
}  // namespace banproj
