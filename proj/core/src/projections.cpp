#include "banproj/projections.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "detail/solvers.hpp"

namespace banproj {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double dot(const DualVector& g, const PrimalVector& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += g[i] * x[i];
  return s;
}

double abs_dot(const DualVector& g, const PrimalVector& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::abs(g[i] * x[i]);
  return s;
}

struct Solved {
  PrimalVector point;
  std::size_t iterations = 0;
  bool converged = true;
};

// `target` is the point whose squared Euclidean distance f reduces to when p = 2.
Solved solve(const LpSpace& space, const ConvexSet& set, const detail::Objective& f, double tol,
             const PrimalVector& target) {
  space.check_dimension(set.dimension());
  auto along = [&](const PrimalVector& base, const PrimalVector& dir, double lo, double hi) {
    const auto ls = detail::minimize_on_path(f, base, dir, lo, hi);
    return Solved{base + ls.t * dir, ls.iterations, true};
  };
  return std::visit(
      [&](const auto& s) -> Solved {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Segment>) {
          const auto ls = detail::minimize_on_path(f, s.a, s.b - s.a, 0.0, 1.0);
          // Endpoints are returned exactly, not as a + 1*(b - a).
          if (ls.t == 0.0) return Solved{s.a, ls.iterations, true};
          if (ls.t == 1.0) return Solved{s.b, ls.iterations, true};
          return Solved{s.a + ls.t * (s.b - s.a), ls.iterations, true};
        } else if constexpr (std::is_same_v<S, Ray>) {
          return along(s.vertex, s.direction, 0.0, kInf);
        } else if constexpr (std::is_same_v<S, Line>) {
          return along(s.point, s.direction, -kInf, kInf);
        } else {
          if (space.p() == 2.0) {
            return Solved{detail::euclidean_nearest(s.vertices, target), 0, true};
          }
          auto fw = detail::frank_wolfe(f, s.vertices, tol);
          return Solved{std::move(fw.point), fw.iterations, fw.converged};
        }
      },
      set.shape());
}

double resolve_tol(const ConvexSet& set, std::optional<double> tol) {
  const double t = tol.value_or(default_tolerance(set));
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("tolerance must be positive");
  return t;
}

}  // namespace

std::string_view to_string(ProjectionKind kind) {
  switch (kind) {
    case ProjectionKind::metric:
      return "metric";
    case ProjectionKind::generalized:
      return "generalized";
    default:
      return "generalized_metric";
  }
}

ProjectionKind parse_projection_kind(std::string_view name) {
  if (name == "metric") return ProjectionKind::metric;
  if (name == "generalized") return ProjectionKind::generalized;
  if (name == "generalized_metric" || name == "gmp") return ProjectionKind::generalized_metric;
  throw InvalidArgument("unknown projection kind '" + std::string(name) + "'");
}

void check_query(ProjectionKind kind, const Query& query) {
  const bool dual = std::holds_alternative<DualVector>(query);
  if (dual != (kind == ProjectionKind::generalized)) {
    throw InvalidArgument(std::string(to_string(kind)) + " projection expects a " +
                          (kind == ProjectionKind::generalized ? "dual" : "primal") + " query");
  }
}

double default_tolerance(const ConvexSet& set) {
  return std::holds_alternative<PolytopeHull>(set.shape()) ? 1e-7 : 1e-9;
}

ProjectionResult metric_project(const LpSpace& space, const ConvexSet& set, const PrimalVector& x,
                                std::optional<double> tol) {
  const double t = resolve_tol(set, tol);
  Solved s = solve(space, set, detail::Objective::distance_to(space, x), t, x);
  ProjectionResult r;
  r.kind = ProjectionKind::metric;
  r.optimal_value = space.norm(x - s.point);
  r.vi_residual = vi_residual_unchecked(space, r.kind, set, x, s.point);
  r.point = std::move(s.point);
  r.iterations = s.iterations;
  r.tol = t;
  r.converged = s.converged;
  return r;
}

ProjectionResult generalized_project(const LpSpace& space, const ConvexSet& set,
                                     const DualVector& psi, std::optional<double> tol) {
  const double t = resolve_tol(set, tol);
  Solved s = solve(space, set, detail::Objective::lyapunov(space, psi), t, as_primal(psi));
  ProjectionResult r;
  r.kind = ProjectionKind::generalized;
  r.optimal_value = space.lyapunov(psi, s.point);
  r.vi_residual = vi_residual_unchecked(space, r.kind, set, psi, s.point);
  r.point = std::move(s.point);
  r.iterations = s.iterations;
  r.tol = t;
  r.converged = s.converged;
  return r;
}

ProjectionResult generalized_metric_project(const LpSpace& space, const ConvexSet& set,
                                            const PrimalVector& x, std::optional<double> tol) {
  ProjectionResult r = generalized_project(space, set, space.duality_map(x), tol);
  r.kind = ProjectionKind::generalized_metric;
  return r;
}

ProjectionResult project(const LpSpace& space, ProjectionKind kind, const ConvexSet& set,
                         const Query& query, std::optional<double> tol) {
  check_query(kind, query);
  switch (kind) {
    case ProjectionKind::metric:
      return metric_project(space, set, std::get<PrimalVector>(query), tol);
    case ProjectionKind::generalized:
      return generalized_project(space, set, std::get<DualVector>(query), tol);
    default:
      return generalized_metric_project(space, set, std::get<PrimalVector>(query), tol);
  }
}

DualVector vi_functional(const LpSpace& space, ProjectionKind kind, const Query& query,
                         const PrimalVector& y) {
  check_query(kind, query);
  switch (kind) {
    case ProjectionKind::metric:
      return space.duality_map(std::get<PrimalVector>(query) - y);
    case ProjectionKind::generalized:
      return std::get<DualVector>(query) - space.duality_map(y);
    default:
      return space.duality_map(std::get<PrimalVector>(query)) - space.duality_map(y);
  }
}

double min_pairing_over_set(const ConvexSet& set, const DualVector& g, const PrimalVector& y) {
  if (g.size() != set.dimension()) throw DimensionMismatch(set.dimension(), g.size());
  if (y.size() != set.dimension()) throw DimensionMismatch(set.dimension(), y.size());
  const double at_y = dot(g, y);
  auto value = [&](const PrimalVector& z) { return at_y - dot(g, z); };

  return std::visit(
      [&](const auto& s) -> double {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Segment>) {
          return std::min(value(s.a), value(s.b));
        } else if constexpr (std::is_same_v<S, PolytopeHull>) {
          double best = kInf;
          for (const auto& v : s.vertices) best = std::min(best, value(v));
          return best;
        } else {
          const PrimalVector& base = [&]() -> const PrimalVector& {
            if constexpr (std::is_same_v<S, Ray>) {
              return s.vertex;
            } else {
              return s.point;
            }
          }();
          // <G, y - (base + t d)> = value(base) - t <G, d>
          const double slope = dot(g, s.direction);
          const double noise = 1e-12 * abs_dot(g, s.direction) + 1e-300;
          if constexpr (std::is_same_v<S, Ray>) {
            if (slope > noise) return -kInf;
          } else {
            if (std::abs(slope) > noise) return -kInf;
          }
          return std::min(value(base), value(base + s.direction));
        }
      },
      set.shape());
}

double vi_residual_unchecked(const LpSpace& space, ProjectionKind kind, const ConvexSet& set,
                             const Query& query, const PrimalVector& y) {
  return min_pairing_over_set(set, vi_functional(space, kind, query, y), y);
}

double vi_residual(const LpSpace& space, ProjectionKind kind, const ConvexSet& set,
                   const Query& query, const PrimalVector& y, double set_tol) {
  if (!contains(space, set, y, set_tol * (1.0 + space.norm(y)))) {
    throw NotInSet("vi_residual: y is not a point of the set");
  }
  return vi_residual_unchecked(space, kind, set, query, y);
}

}  // namespace banproj
