#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>

#include "banproj/convex_sets.hpp"
#include "banproj/lp_space.hpp"

namespace banproj {

/// P_C (metric), pi_C (generalized, acts on X*), Pi_C = pi_C o J (generalized metric).
enum class ProjectionKind { metric, generalized, generalized_metric };

std::string_view to_string(ProjectionKind kind);
/// Accepts "metric", "generalized", "generalized_metric" and "gmp".
ProjectionKind parse_projection_kind(std::string_view name);

/// Argument of a projection: a point of X for metric and generalized_metric,
/// a functional in X* for generalized.
using Query = std::variant<PrimalVector, DualVector>;

/// Throws InvalidArgument if the query lives in the wrong space for `kind`.
void check_query(ProjectionKind kind, const Query& query);

struct ProjectionResult {
  ProjectionKind kind = ProjectionKind::metric;
  PrimalVector point;
  /// |x - point|_p for metric, V(psi, point) otherwise.
  double optimal_value = 0.0;
  /// Variational-inequality certificate; >= -10 tol on success.
  double vi_residual = 0.0;
  std::size_t iterations = 0;
  double tol = 0.0;
  /// False when the iteration cap was reached before the stopping test.
  bool converged = true;

  bool certified() const { return converged && vi_residual >= -10.0 * tol; }
};

/// 1e-9 for segments, rays and lines; 1e-7 for polytopes.
double default_tolerance(const ConvexSet& set);

/// Nearest point of C to x in the p-norm.
///
/// Segments, rays and lines are solved in their scalar parameter by bisection
/// on the derivative sign of |x - z(t)|^2; polytopes by pairwise Frank-Wolfe on
/// barycentric weights, stopped when the duality gap falls below tol. For p = 2
/// polytopes are solved exactly by the minimum-norm-point method.
ProjectionResult metric_project(const LpSpace& space, const ConvexSet& set, const PrimalVector& x,
                                std::optional<double> tol = std::nullopt);

/// Minimizer over C of V(psi, .).
ProjectionResult generalized_project(const LpSpace& space, const ConvexSet& set,
                                     const DualVector& psi,
                                     std::optional<double> tol = std::nullopt);

/// generalized_project(C, J x); the returned point is that of the composition.
ProjectionResult generalized_metric_project(const LpSpace& space, const ConvexSet& set,
                                            const PrimalVector& x,
                                            std::optional<double> tol = std::nullopt);

ProjectionResult project(const LpSpace& space, ProjectionKind kind, const ConvexSet& set,
                         const Query& query, std::optional<double> tol = std::nullopt);

/// The functional G of the variational characterization y = proj(query) iff
/// <G, y - z> >= 0 for all z in C:
///   metric             G = J(x - y)
///   generalized        G = psi - J y
///   generalized_metric G = J x - J y
DualVector vi_functional(const LpSpace& space, ProjectionKind kind, const Query& query,
                         const PrimalVector& y);

/// min over z in C of <G, y - z> for the kind's functional G.
///
/// Vertices suffice for segments and polytopes since the form is linear in z.
/// Rays use the generators {vertex, vertex + d} plus the recession condition
/// <G, -d> >= 0, lines need <G, d> = 0; when the form is unbounded below the
/// result is -infinity. Throws NotInSet if y is farther than
/// set_tol * (1 + |y|) from C.
double vi_residual(const LpSpace& space, ProjectionKind kind, const ConvexSet& set,
                   const Query& query, const PrimalVector& y, double set_tol = 1e-8);

/// vi_residual without the membership test on y.
double vi_residual_unchecked(const LpSpace& space, ProjectionKind kind, const ConvexSet& set,
                             const Query& query, const PrimalVector& y);

/// min over z in C of <G, y - z> for an explicit functional G (-inf if unbounded).
double min_pairing_over_set(const ConvexSet& set, const DualVector& g, const PrimalVector& y);

}  // namespace banproj
