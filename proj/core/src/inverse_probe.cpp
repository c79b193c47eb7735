#include "banproj/inverse_probe.hpp"

#include <cmath>
#include <random>
#include <string>

#include "banproj/random.hpp"

namespace banproj {

namespace {

/// a + t (b - a) for two queries living in the same space.
Query along(const Query& a, const Query& b, double t) {
  if (a.index() != b.index()) throw InvalidArgument("probe points must live in the same space");
  return std::visit(
      [&](const auto& av) -> Query {
        using V = std::decay_t<decltype(av)>;
        const V& bv = std::get<V>(b);
        return av + t * (bv - av);
      },
      a);
}

void require_in_set(const LpSpace& space, const ConvexSet& set, const PrimalVector& y) {
  if (!contains(space, set, y, 1e-8 * (1.0 + space.norm(y)))) {
    throw NotInSet("probe base point y is not in the set");
  }
}

ProbeReport make_report(std::optional<ProjectionKind> kind, Claim claim, double tol) {
  ProbeReport r;
  r.kind = kind;
  r.claim = claim;
  r.tol = tol;
  return r;
}

}  // namespace

std::string_view to_string(Claim claim) {
  switch (claim) {
    case Claim::is_cone:
      return "is_cone";
    case Claim::is_convex:
      return "is_convex";
    case Claim::image_is_segment:
      return "image_is_segment";
    default:
      return "image_is_cone";
  }
}

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::consistent ? "consistent" : "refuted";
}

Claim parse_claim(std::string_view name) {
  if (name == "cone" || name == "is_cone") return Claim::is_cone;
  if (name == "convex" || name == "is_convex") return Claim::is_convex;
  if (name == "image_is_segment") return Claim::image_is_segment;
  if (name == "image_is_cone") return Claim::image_is_cone;
  throw InvalidArgument("unknown claim '" + std::string(name) + "'");
}

std::vector<double> default_t_grid() { return {0.0, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0}; }

std::vector<double> default_pair_weights() { return {2.0 / 3.0, 0.25, 0.5}; }

bool in_inverse_image(const LpSpace& space, ProjectionKind kind, const ConvexSet& set,
                      const PrimalVector& y, const Query& u, double tol) {
  return vi_residual(space, kind, set, u, y) >= -tol;
}

ProbeReport cone_probe(const LpSpace& space, ProjectionKind kind, const ConvexSet& set,
                       const PrimalVector& y, const Query& u, const Query& vertex,
                       const std::vector<double>& t_grid, double tol) {
  require_in_set(space, set, y);
  check_query(kind, vertex);
  if (vi_residual_unchecked(space, kind, set, u, y) < -tol) {
    throw PreconditionError("cone_probe: u is not in the inverse image of y");
  }
  ProbeReport report = make_report(kind, Claim::is_cone, tol);
  for (double t : t_grid) {
    if (!(t >= 0.0)) throw InvalidArgument("cone_probe: t values must be nonnegative");
    const Query point = along(vertex, u, t);
    const double r = vi_residual_unchecked(space, kind, set, point, y);
    ++report.samples;
    if (r < -10.0 * tol) {
      report.verdict = Verdict::refuted;
      report.witness = Witness{{u, vertex, point}, {r}, t, "vertex + t(u - vertex) leaves the set"};
      break;
    }
  }
  return report;
}

ProbeReport convexity_refute(const LpSpace& space, ProjectionKind kind, const ConvexSet& set,
                             const PrimalVector& y, const std::vector<Query>& candidates,
                             std::size_t pair_budget, const std::vector<double>& weights,
                             std::uint64_t seed, double tol) {
  require_in_set(space, set, y);
  for (const auto& c : candidates) {
    if (vi_residual_unchecked(space, kind, set, c, y) < -tol) {
      throw PreconditionError("convexity_refute: candidate is not in the inverse image");
    }
  }
  ProbeReport report = make_report(kind, Claim::is_convex, tol);
  const std::size_t m = candidates.size();
  if (m < 2) return report;

  auto scan_pair = [&](std::size_t i, std::size_t j) {
    for (double w : weights) {
      // w * a + (1 - w) * b == b + w (a - b)
      const Query point = along(candidates[j], candidates[i], w);
      const double r = vi_residual_unchecked(space, kind, set, point, y);
      ++report.samples;
      if (r < -10.0 * tol) {
        report.verdict = Verdict::refuted;
        report.witness = Witness{{candidates[i], candidates[j], point},
                                 {r},
                                 w,
                                 "w*a + (1-w)*b leaves the inverse image"};
        return true;
      }
    }
    return false;
  };

  const std::size_t total_pairs = m * (m - 1) / 2;
  if (total_pairs <= pair_budget) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (scan_pair(i, j)) return report;
      }
    }
    return report;
  }
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  for (std::size_t k = 0; k < pair_budget; ++k) {
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    if (scan_pair(i, j)) return report;
  }
  return report;
}

std::vector<DualVector> j_image_curve(const LpSpace& space, const PrimalVector& u,
                                      const PrimalVector& v, std::size_t samples) {
  if (samples < 2) throw InvalidArgument("j_image_curve needs at least two samples");
  if (u == v) throw PreconditionError("j_image_curve needs u != v");
  std::vector<DualVector> curve;
  curve.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(samples - 1);
    curve.push_back(space.duality_map(convex_combination(t, v, u)));
  }
  return curve;
}

ProbeReport segment_image_refute(const LpSpace& space, const PrimalVector& u,
                                 const PrimalVector& v, double weight, double tol) {
  if (!(weight >= 0.0 && weight <= 1.0)) throw InvalidArgument("weight must lie in [0, 1]");
  if (u == v) throw PreconditionError("segment_image_refute needs u != v");
  ProbeReport report = make_report(std::nullopt, Claim::image_is_segment, tol);
  const DualVector psi =
      convex_combination(weight, space.duality_map(u), space.duality_map(v));
  const PrimalVector preimage = space.inverse_duality_map(psi);
  const double dist = distance(space, ConvexSet::segment(v, u), preimage);
  report.samples = 1;
  if (dist > 10.0 * tol) {
    report.verdict = Verdict::refuted;
    report.witness =
        Witness{{psi, preimage}, {dist}, weight, "psi is on [Jv, Ju] but J*psi is off [v, u]"};
  }
  return report;
}

ProbeReport halfcone_convexity_refute(const LpSpace& space, const PrimalVector& y,
                                      const std::optional<DualVector>& shift,
                                      const PrimalVector& c0, const PrimalVector& c1,
                                      const std::vector<double>& weights, HalfconeSense sense,
                                      double tol) {
  const DualVector offset = shift.value_or(DualVector::zeros(space.n()));
  // Signed so that membership always reads value >= 0.
  const double sign = sense == HalfconeSense::at_least ? 1.0 : -1.0;
  auto value = [&](const PrimalVector& x) {
    return sign * space.pair(space.duality_map(x) - offset, y);
  };
  if (value(c0) < -tol || value(c1) < -tol) {
    throw PreconditionError("halfcone_convexity_refute: candidates violate the inequality");
  }
  ProbeReport report = make_report(std::nullopt, Claim::is_convex, tol);
  for (double w : weights) {
    const PrimalVector g = convex_combination(w, c0, c1);
    const double val = value(g);
    ++report.samples;
    if (val < -10.0 * tol) {
      report.verdict = Verdict::refuted;
      report.witness = Witness{{g}, {sign * val}, w, "<Jg - shift, y> has the wrong sign"};
      break;
    }
  }
  return report;
}

ProbeReport cone_image_probe(const LpSpace& space, const PrimalVector& g0,
                             const PrimalVector& g1, const DualVector& phi, double weight,
                             double tol) {
  if (!(weight >= 0.0 && weight <= 1.0)) throw InvalidArgument("weight must lie in [0, 1]");
  const double scale = lp::norm(phi.coords(), 2.0);
  for (const auto* g : {&g0, &g1}) {
    if (std::abs(space.pair(phi, *g)) > 1e-12 * (1.0 + scale * lp::norm(g->coords(), 2.0))) {
      throw PreconditionError("cone_image_probe: generators must lie in the kernel of phi");
    }
  }
  ProbeReport report = make_report(std::nullopt, Claim::image_is_cone, tol);
  const DualVector psi =
      convex_combination(weight, space.duality_map(g0), space.duality_map(g1));
  const PrimalVector preimage = space.inverse_duality_map(psi);
  const double val = space.pair(phi, preimage);
  report.samples = 1;
  if (std::abs(val) > 10.0 * tol) {
    report.verdict = Verdict::refuted;
    report.witness = Witness{{psi, preimage}, {val}, weight, "J*psi is not in ker(phi)"};
  }
  return report;
}

ConjugacyReport conjugacy_check(const LpSpace& space, const ConvexSet& set, const PrimalVector& y,
                                const std::vector<DualVector>& dual_members,
                                const std::vector<PrimalVector>& primal_members, double tol) {
  require_in_set(space, set, y);
  ConjugacyReport report;
  for (const auto& psi : dual_members) {
    if (vi_residual_unchecked(space, ProjectionKind::generalized, set, psi, y) < -tol) {
      throw PreconditionError("conjugacy_check: functional is not in pi_C^{-1}(y)");
    }
    ++report.checked;
    const PrimalVector u = space.inverse_duality_map(psi);
    if (vi_residual_unchecked(space, ProjectionKind::generalized_metric, set, u, y) < -tol) {
      ++report.failures;
    }
  }
  for (const auto& u : primal_members) {
    if (vi_residual_unchecked(space, ProjectionKind::generalized_metric, set, u, y) < -tol) {
      throw PreconditionError("conjugacy_check: point is not in Pi_C^{-1}(y)");
    }
    ++report.checked;
    if (vi_residual_unchecked(space, ProjectionKind::generalized, set, space.duality_map(u), y) <
        -tol) {
      ++report.failures;
    }
  }
  return report;
}

ProbeReport search_non_cone_witness(const LpSpace& space, ProjectionKind kind,
                                    const ConvexSet& set, const PrimalVector& y,
                                    std::size_t budget, std::uint64_t seed, double t,
                                    double tol) {
  require_in_set(space, set, y);
  const Query vertex = kind == ProjectionKind::generalized ? Query(space.duality_map(y)) : Query(y);
  ProbeReport report = make_report(kind, Claim::is_cone, tol);
  Rng rng(seed);
  std::uniform_real_distribution<double> log_scale(-3.0, 3.0);
  for (std::size_t k = 0; k < budget; ++k) {
    const double s = std::exp(log_scale(rng));
    const auto step = gaussian_coords(rng, space.n(), s);
    const Query candidate = std::visit(
        [&](const auto& base) -> Query {
          using V = std::decay_t<decltype(base)>;
          return base + V(step);
        },
        vertex);
    ++report.samples;
    const double r_member = vi_residual_unchecked(space, kind, set, candidate, y);
    if (r_member < -tol) continue;
    const Query point = along(vertex, candidate, t);
    const double r_point = vi_residual_unchecked(space, kind, set, point, y);
    if (r_point < -10.0 * tol) {
      report.verdict = Verdict::refuted;
      report.witness = Witness{{candidate, vertex, point},
                               {r_member, r_point},
                               t,
                               "member u with vertex + t(u - vertex) outside the inverse image"};
      break;
    }
  }
  return report;
}

}  // namespace banproj
