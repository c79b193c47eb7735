#include <gtest/gtest.h>

#include <cmath>

#include "banproj/moduli.hpp"

namespace banproj {
namespace {

constexpr SamplingBudget kSmall{3000, 100, 5, 1};

double delta_closed(double p, double eps) {
  // valid for p >= 2
  return 1.0 - std::pow(1.0 - std::pow(eps / 2.0, p), 1.0 / p);
}

double rho_closed(double p, double t) {
  // valid for p >= 2 and t <= 1
  return std::pow((std::pow(1.0 + t, p) + std::pow(1.0 - t, p)) / 2.0, 1.0 / p) - 1.0;
}

TEST(Moduli, ArgumentValidation) {
  const LpSpace X(3, 3.0);
  EXPECT_THROW(modulus_convexity(X, -0.1, kSmall), InvalidArgument);
  EXPECT_THROW(modulus_convexity(X, 2.5, kSmall), InvalidArgument);
  EXPECT_THROW(modulus_smoothness(X, 0.0, kSmall), InvalidArgument);
  EXPECT_EQ(modulus_convexity(X, 0.0, kSmall).value, 0.0);
}

TEST(Moduli, BoundKinds) {
  const LpSpace X(2, 3.0);
  EXPECT_EQ(modulus_convexity(X, 0.5, kSmall).bound_kind, BoundKind::upper_bound_of_inf);
  EXPECT_EQ(modulus_smoothness(X, 0.5, kSmall).bound_kind, BoundKind::lower_bound_of_sup);
  EXPECT_EQ(to_string(BoundKind::upper_bound_of_inf), "upper_bound_of_inf");
}

TEST(Moduli, EuclideanClosedForms) {
  const LpSpace X(2, 2.0);
  for (double e : {0.25, 0.5, 1.0}) {
    EXPECT_NEAR(modulus_convexity(X, e, kSmall).value, 1.0 - std::sqrt(1.0 - e * e / 4.0), 5e-3);
    EXPECT_NEAR(modulus_smoothness(X, e, kSmall).value, std::sqrt(1.0 + e * e) - 1.0, 5e-3);
  }
}

TEST(Moduli, CubicSpaceAgainstMultistartOracle) {
  // multistart Nelder-Mead oracle (tests/oracles/derive_expected.py), n = 3:
  // rho(0.5) = 0.20507113208761618, delta(1) = 0.04353440861380542
  const LpSpace X(3, 3.0);
  const auto rho = modulus_smoothness(X, 0.5, SamplingBudget{});
  const auto delta = modulus_convexity(X, 1.0, SamplingBudget{});
  EXPECT_NEAR(rho.value, 0.20507113208761618, 1e-4);
  EXPECT_NEAR(delta.value, 0.04353440861380542, 1e-4);
  EXPECT_NEAR(rho_closed(3.0, 0.5), 0.20507113208761618, 1e-9);
  EXPECT_NEAR(delta_closed(3.0, 1.0), 0.04353440861380542, 1e-8);
}

TEST(Moduli, EstimatorsAreOneSided) {
  for (double p : {2.0, 3.0, 4.0}) {
    const LpSpace X(3, p);
    for (double e : {0.25, 0.5, 1.0, 1.5}) {
      EXPECT_GE(modulus_convexity(X, e, kSmall).value, delta_closed(p, e) - 1e-12);
    }
    for (double t : {0.25, 0.5, 1.0}) {
      EXPECT_LE(modulus_smoothness(X, t, kSmall).value, rho_closed(p, t) + 1e-12);
    }
  }
}

TEST(Moduli, SmoothnessBoundedByArgument) {
  for (double p : {1.5, 2.0, 3.0, 4.0}) {
    const LpSpace X(3, p);
    for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      EXPECT_LE(modulus_smoothness(X, t, kSmall).value, t + 1e-12);
    }
  }
}

TEST(Moduli, ConvexityMonotoneInEpsilonForFixedSeed) {
  const LpSpace X(3, 1.5);
  double prev = 0.0;
  for (double e : {0.1, 0.3, 0.6, 1.0, 1.4, 1.8, 2.0}) {
    const double v = modulus_convexity(X, e, {2000, 0, 9, 1}).value;
    EXPECT_GE(v, prev - 1e-15);
    EXPECT_LE(v, 1.0);
    prev = v;
  }
}

TEST(Moduli, ResultsIndependentOfWorkerCount) {
  const LpSpace X(5, 3.0);
  SamplingBudget one{5000, 50, 42, 1};
  SamplingBudget three = one;
  three.workers = 3;
  EXPECT_EQ(modulus_convexity(X, 0.7, one).value, modulus_convexity(X, 0.7, three).value);
  EXPECT_EQ(modulus_smoothness(X, 0.7, one).value, modulus_smoothness(X, 0.7, three).value);
}

TEST(Moduli, KrConstantEuclideanClosedForm) {
  // delta(1/4) / rho(13.6) for x = (2, 0), proj = (1, 0), gamma = 1.7
  const LpSpace X(2, 2.0);
  const auto k = kr_constant(X, PrimalVector{2.0, 0.0}, PrimalVector{1.0, 0.0}, 1.7, kSmall);
  EXPECT_NEAR(k.raw_ratio, 0.0006206722442936478, 1e-6);
  EXPECT_GE(k.raw_ratio, 0.0006206722442936478 * (1.0 - 1e-9));
  EXPECT_FALSE(k.clamped);
  EXPECT_EQ(k.value, k.raw_ratio);
  EXPECT_DOUBLE_EQ(k.radius, 2.0);
  EXPECT_DOUBLE_EQ(k.distance, 1.0);
  EXPECT_DOUBLE_EQ(k.delta.argument, 0.25);
  EXPECT_DOUBLE_EQ(k.rho.argument, 16.0 * 1.7 * 0.5);
}

TEST(Moduli, KrConstantPreconditions) {
  const LpSpace X(2, 3.0);
  const PrimalVector x{1.0, 2.0};
  EXPECT_THROW(kr_constant(X, x, x, 1.7, kSmall), PreconditionError);
  EXPECT_THROW(kr_constant(X, x, PrimalVector{0.0, 0.0}, 1.0, kSmall), InvalidArgument);
}

TEST(Moduli, FigielDiagnosticReportsBothSides) {
  const LpSpace X(3, 3.0);
  const auto d = figiel_check(X, PrimalVector{1.0, 0.5, -0.2}, PrimalVector{-0.3, 0.4, 0.9}, 1.7,
                              kSmall);
  EXPECT_EQ(d.smoothness_modulus, "rho_X");
  EXPECT_GT(d.lhs_monotone, 0.0);
  EXPECT_GT(d.rhs_monotone, 0.0);
  EXPECT_GT(d.lhs_lipschitz, 0.0);
  EXPECT_EQ(d.monotone_holds, d.lhs_monotone >= d.rhs_monotone);
  EXPECT_EQ(d.lipschitz_holds, d.lhs_lipschitz <= d.rhs_lipschitz);
  EXPECT_THROW(figiel_check(X, d.x, d.x, 1.7, kSmall), PreconditionError);
}

}  // namespace
}  // namespace banproj
