#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "banproj/lp_space.hpp"

namespace banproj {

/// Sampling estimators can only bound a sup/inf from one side; the side is
/// carried with every estimate.
enum class BoundKind { upper_bound_of_inf, lower_bound_of_sup };

std::string_view to_string(BoundKind kind);

struct SamplingBudget {
  std::size_t samples = 20000;
  std::size_t refinement_steps = 200;
  std::uint64_t seed = 0;
  /// Worker threads. Results are bit-identical for any value.
  unsigned workers = 1;
};

struct ModulusEstimate {
  double argument = 0.0;
  double value = 0.0;
  BoundKind bound_kind = BoundKind::upper_bound_of_inf;
  std::size_t samples_used = 0;
  std::size_t refinement_iterations = 0;
};

/// Upper bound of delta_X(eps) = inf{1 - |(x+y)/2| : x, y in B_X, |x-y| >= eps}.
///
/// Every sampled pair is feasible by construction: a center direction u and a
/// difference direction d (both unit) give x, y = lambda*u +- (eps/2)*d with the
/// largest lambda keeping both in the unit ball, so the sample value
/// 1 - lambda is always >= delta_X(eps). The best sample is polished with
/// Nelder-Mead over (u, d). Throws InvalidArgument unless 0 <= eps <= 2.
ModulusEstimate modulus_convexity(const LpSpace& space, double eps,
                                  const SamplingBudget& budget = {});

/// Lower bound of rho_X(t) = sup{(|x+y| + |x-y|)/2 - 1 : |x| = 1, |y| = t}.
/// Throws InvalidArgument unless t > 0.
ModulusEstimate modulus_smoothness(const LpSpace& space, double t,
                                   const SamplingBudget& budget = {});

/// Default value of the Figiel constant used by callers that do not supply one.
inline constexpr double kDefaultFigielGamma = 1.7;

struct KrEstimate {
  /// min(raw_ratio, 1)
  double value = 0.0;
  double raw_ratio = 0.0;
  /// Set when raw_ratio exceeded 1 and value was clamped.
  bool clamped = false;
  double radius = 0.0;    // R = max(|x|, |proj|)
  double distance = 0.0;  // |x - proj|
  double gamma = 0.0;
  ModulusEstimate delta;  // at |x - proj| / (2R)
  ModulusEstimate rho;    // at 16 gamma |x - proj| / R
};

/// K_R = delta(|x-proj|/(2R)) / rho(16 gamma |x-proj|/R), R = max(|x|, |proj|).
/// Since delta is estimated from above and rho from below the ratio is an
/// over-estimate of the exact constant. Throws PreconditionError if x == proj
/// and InvalidArgument if gamma <= 1.
KrEstimate kr_constant(const LpSpace& space, const PrimalVector& x, const PrimalVector& proj,
                       double gamma = kDefaultFigielGamma, const SamplingBudget& budget = {});

struct FigielDiagnostic {
  PrimalVector x;
  PrimalVector y;
  double gamma = 0.0;
  double radius = 0.0;
  /// <Jx - Jy, x - y>
  double lhs_monotone = 0.0;
  /// R^2/(2 gamma) * delta(|x-y|/(2R))
  double rhs_monotone = 0.0;
  /// |Jx - Jy|_q
  double lhs_lipschitz = 0.0;
  /// R^2/(2 gamma |x-y|) * rho(16 gamma |x-y| / R)
  double rhs_lipschitz = 0.0;
  bool monotone_holds = false;
  bool lipschitz_holds = false;
  /// The upper inequality is stated with an undefined sigma_X; it is evaluated
  /// with the modulus of smoothness and labelled as such.
  std::string_view smoothness_modulus = "rho_X";
  ModulusEstimate delta;
  ModulusEstimate rho;
};

/// Evaluates both Figiel-type inequalities for one pair. Diagnostic only.
/// Throws PreconditionError if x == y and InvalidArgument if gamma <= 1.
FigielDiagnostic figiel_check(const LpSpace& space, const PrimalVector& x, const PrimalVector& y,
                              double gamma = kDefaultFigielGamma,
                              const SamplingBudget& budget = {});

}  // namespace banproj
