#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "banproj/convex_sets.hpp"
#include "banproj/lp_space.hpp"
#include "banproj/projections.hpp"

namespace banproj {

enum class Claim { is_cone, is_convex, image_is_segment, image_is_cone };
enum class Verdict { consistent, refuted };

std::string_view to_string(Claim claim);
std::string_view to_string(Verdict verdict);
Claim parse_claim(std::string_view name);

/// Concrete evidence against a claim. `values` are the residuals (or pairing
/// values) that violate the defining inequality; `parameter` is the scale t or
/// convex weight that produced the offending point.
struct Witness {
  std::vector<Query> points;
  std::vector<double> values;
  double parameter = 0.0;
  std::string note;
};

/// Outcome of a structure probe. `consistent` only means no violation was
/// found at this budget; `refuted` always carries a witness whose defining
/// inequality fails by more than 10 * tol.
struct ProbeReport {
  std::optional<ProjectionKind> kind;
  Claim claim = Claim::is_cone;
  Verdict verdict = Verdict::consistent;
  std::optional<Witness> witness;
  std::size_t samples = 0;
  double tol = 0.0;
};

/// t values scanned by cone_probe when none are given.
std::vector<double> default_t_grid();
/// Convex weights w in w*a + (1-w)*b scanned by the convexity probes.
std::vector<double> default_pair_weights();

inline constexpr double kProbeTol = 1e-9;

/// u in proj^{-1}(y) iff the variational residual at y is >= -tol.
/// `u` is a DualVector for kind generalized and a PrimalVector otherwise.
bool in_inverse_image(const LpSpace& space, ProjectionKind kind, const ConvexSet& set,
                      const PrimalVector& y, const Query& u, double tol = kProbeTol);

/// Tests membership of vertex + t(u - vertex) for every t in the grid. For
/// kind generalized the probe runs in X* and the vertex is a functional
/// (J y for the cone of generalized inverse images). Throws PreconditionError if u is not a member.
ProbeReport cone_probe(const LpSpace& space, ProjectionKind kind, const ConvexSet& set,
                       const PrimalVector& y, const Query& u, const Query& vertex,
                       const std::vector<double>& t_grid = default_t_grid(),
                       double tol = kProbeTol);

/// Scans w*a + (1-w)*b over candidate pairs and weights. When the candidate
/// list has more pairs than `pair_budget`, pairs are sampled from `seed`;
/// otherwise all pairs are scanned in index order. Throws PreconditionError
/// if a candidate is not in the inverse image.
ProbeReport convexity_refute(const LpSpace& space, ProjectionKind kind, const ConvexSet& set,
                             const PrimalVector& y, const std::vector<Query>& candidates,
                             std::size_t pair_budget,
                             const std::vector<double>& weights = default_pair_weights(),
                             std::uint64_t seed = 0, double tol = kProbeTol);

/// J(t v + (1 - t) u) for `samples` uniformly spaced t in [0, 1], starting at t = 0.
std::vector<DualVector> j_image_curve(const LpSpace& space, const PrimalVector& u,
                                      const PrimalVector& v, std::size_t samples);

/// psi = weight*Ju + (1-weight)*Jv lies on [Jv, Ju]; refuted when J*psi is not
/// on [v, u] (so psi is not in J[v, u]).
ProbeReport segment_image_refute(const LpSpace& space, const PrimalVector& u,
                                 const PrimalVector& v, double weight, double tol = kProbeTol);

enum class HalfconeSense { at_least, at_most };

/// The set {x : <Jx - shift, y> >= 0} (or <= 0). Combinations
/// w*c0 + (1-w)*c1 are evaluated for each weight; refuted on a sign violation.
ProbeReport halfcone_convexity_refute(const LpSpace& space, const PrimalVector& y,
                                      const std::optional<DualVector>& shift,
                                      const PrimalVector& c0, const PrimalVector& c1,
                                      const std::vector<double>& weights,
                                      HalfconeSense sense = HalfconeSense::at_least,
                                      double tol = kProbeTol);

/// K = {w : <phi, w> = 0} spanned by two generators; psi = weight*J(g0) +
/// (1-weight)*J(g1) is in JK iff <phi, J* psi> = 0.
ProbeReport cone_image_probe(const LpSpace& space, const PrimalVector& g0,
                             const PrimalVector& g1, const DualVector& phi, double weight,
                             double tol = kProbeTol);

struct ConjugacyReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

/// For each psi in pi_C^{-1}(y), J* psi must be in Pi_C^{-1}(y); for each u in
/// Pi_C^{-1}(y), J u must be in pi_C^{-1}(y). Members are checked in both
/// directions. Throws PreconditionError if an input is not a member.
ConjugacyReport conjugacy_check(const LpSpace& space, const ConvexSet& set, const PrimalVector& y,
                                const std::vector<DualVector>& dual_members,
                                const std::vector<PrimalVector>& primal_members,
                                double tol = kProbeTol);

/// Random search for a member u of the inverse image whose point
/// vertex + t(u - vertex) (default the midpoint with y) leaves it. Candidates
/// are vertex + s*d with seeded Gaussian d and log-uniform s in [e^-3, e^3],
/// where the vertex is y (J y for kind generalized). Refuted when a member's
/// point fails membership by more than 10 * tol.
ProbeReport search_non_cone_witness(const LpSpace& space, ProjectionKind kind,
                                    const ConvexSet& set, const PrimalVector& y,
                                    std::size_t budget, std::uint64_t seed, double t = 0.5,
                                    double tol = kProbeTol);

}  // namespace banproj
