#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "banproj/convex_sets.hpp"
#include "banproj/moduli.hpp"
#include "banproj/projections.hpp"

namespace banproj {

/// Slack added to the right-hand side of every trial inequality.
inline constexpr double kTrialSlack = 1e-6;

/// A finite norm-convergent sequence standing in for a weakly convergent one,
/// with the per-term quantity each trial inspects.
struct SequenceTrial {
  /// "3.2", "3.4", "3.6" or "3.8".
  std::string theorem;
  std::optional<ProjectionKind> kind;
  Query limit;
  std::vector<Query> terms;
  ConvexSet set;
  /// Distances for 3.2 and 3.8, |proj(term) - y| for 3.4 / 3.6.
  std::vector<double> per_term;
  /// Minimum of per_term over the tail half (indices >= n/2).
  double liminf_proxy = 0.0;
  /// Left-hand side of the checked inequality.
  double target = 0.0;
  double slack = kTrialSlack;
  bool passed = false;
  /// Graph-closedness trials: the common value y of the projections.
  std::optional<PrimalVector> y;
  /// K_R liminf trials: the estimator behind K_R, with its bound_kind flags.
  std::optional<KrEstimate> kr;
};

/// Magnitudes m_1 >= m_2 >= ... of the seeded perturbations.
///
/// m_k = c * 10^(-16 (k-1) / (h-1)), h = ceil(n/2): the first term moves by c
/// and the tail half sits within c * 1e-16 of the limit, so the tail minimum
/// is a faithful liminf proxy. Throws InvalidArgument unless n_terms >= 8.
std::vector<double> perturbation_magnitudes(std::size_t n_terms, double c);

/// terms_k = x + m_k d_k with d_k a seeded unit direction per index and
/// c = 0.1 |x| (0.1 when x = 0).
std::vector<PrimalVector> perturbed_sequence(const LpSpace& space, const PrimalVector& x,
                                             std::uint64_t seed, std::size_t n_terms);
std::vector<DualVector> perturbed_sequence(const LpSpace& space, const DualVector& psi,
                                           std::uint64_t seed, std::size_t n_terms);

/// Throws PreconditionError unless |term_k - limit| is nonincreasing over the
/// tail half and the final gap is <= 1e-8.
void check_convergence(const LpSpace& space, const Query& limit, const std::vector<Query>& terms);

/// |x - P_C x| <= min over the tail of |x_k - P_C x_k| + slack.
SequenceTrial lsc_distance_trial(const LpSpace& space, const ConvexSet& set, const PrimalVector& x,
                                 std::uint64_t seed, std::size_t n_terms);

/// Graph closedness of pi_C (kind generalized, dual limit) or Pi_C (kind
/// generalized_metric, primal limit) on a seeded sequence converging to
/// `limit`. When y is omitted it is taken as the projection of the last term.
/// Throws PreconditionError if a tail projection is farther than 1e-6 from y.
SequenceTrial graph_closedness_trial(const LpSpace& space, ProjectionKind kind,
                                     const ConvexSet& set, const Query& limit,
                                     std::optional<PrimalVector> y, std::size_t n_terms,
                                     std::uint64_t seed);

/// Same trial on caller-supplied terms.
SequenceTrial graph_closedness_trial(const LpSpace& space, ProjectionKind kind,
                                     const ConvexSet& set, const Query& limit,
                                     std::vector<Query> terms, std::optional<PrimalVector> y);

/// Smaller than the estimator default; K_R is evaluated once per trial.
inline constexpr SamplingBudget kTrialBudget{4000, 100, 0, 1};

/// K_R |x - Pi_C x| <= min over the tail of |x_k - Pi_C x_k| + slack.
/// Throws PreconditionError if x == Pi_C x and InvalidArgument if gamma <= 1.
SequenceTrial kr_liminf_trial(const LpSpace& space, const ConvexSet& set, const PrimalVector& x,
                              double gamma, std::size_t n_terms, std::uint64_t seed,
                              const SamplingBudget& budget = kTrialBudget);

}  // namespace banproj
