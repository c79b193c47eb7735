#include "banproj/convex_sets.hpp"

#include <cmath>
#include <limits>

#include "detail/solvers.hpp"

namespace banproj {

namespace {

double dot(const DualVector& psi, const PrimalVector& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += psi[i] * x[i];
  return s;
}

double euclid(std::span<const double> v) { return lp::norm(v, 2.0); }

void require_same(std::size_t n, const PrimalVector& v) {
  if (v.size() != n) throw DimensionMismatch(n, v.size());
}

void require_direction(const PrimalVector& d) {
  if (d.is_zero()) throw InvalidArgument("ray and line directions must be nonzero");
}

// Relative threshold below which <psi, d> counts as zero for unboundedness tests.
bool negligible_slope(double slope, const DualVector& psi, const PrimalVector& d) {
  return std::abs(slope) <= 1e-12 * euclid(psi.coords()) * euclid(d.coords());
}

}  // namespace

ConvexSet ConvexSet::segment(PrimalVector a, PrimalVector b) {
  require_same(a.size(), b);
  if (a.size() == 0) throw InvalidArgument("empty coordinate vector");
  const std::size_t n = a.size();
  return ConvexSet(Segment{std::move(a), std::move(b)}, n);
}

ConvexSet ConvexSet::ray(PrimalVector vertex, PrimalVector direction) {
  require_same(vertex.size(), direction);
  require_direction(direction);
  const std::size_t n = vertex.size();
  return ConvexSet(Ray{std::move(vertex), std::move(direction)}, n);
}

ConvexSet ConvexSet::line(PrimalVector point, PrimalVector direction) {
  require_same(point.size(), direction);
  require_direction(direction);
  const std::size_t n = point.size();
  return ConvexSet(Line{std::move(point), std::move(direction)}, n);
}

ConvexSet ConvexSet::polytope(std::vector<PrimalVector> vertices) {
  if (vertices.empty()) throw InvalidArgument("polytope needs at least one vertex");
  const std::size_t n = vertices.front().size();
  if (n == 0) throw InvalidArgument("empty coordinate vector");
  for (const auto& v : vertices) require_same(n, v);
  return ConvexSet(PolytopeHull{std::move(vertices)}, n);
}

std::string_view ConvexSet::type_name() const noexcept {
  switch (shape_.index()) {
    case 0:
      return "segment";
    case 1:
      return "ray";
    case 2:
      return "line";
    default:
      return "polytope";
  }
}

bool ConvexSet::is_polyhedral() const noexcept {
  return std::holds_alternative<Segment>(shape_) || std::holds_alternative<PolytopeHull>(shape_);
}

double distance(const LpSpace& space, const ConvexSet& set, const PrimalVector& x) {
  space.check_dimension(set.dimension());
  space.check_dimension(x.size());
  const auto f = detail::Objective::distance_to(space, x);
  constexpr double inf = std::numeric_limits<double>::infinity();

  auto along = [&](const PrimalVector& base, const PrimalVector& dir, double lo, double hi) {
    const double t = detail::minimize_on_path(f, base, dir, lo, hi).t;
    return space.norm(x - (base + t * dir));
  };

  return std::visit(
      [&](const auto& s) -> double {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Segment>) {
          return along(s.a, s.b - s.a, 0.0, 1.0);
        } else if constexpr (std::is_same_v<S, Ray>) {
          return along(s.vertex, s.direction, 0.0, inf);
        } else if constexpr (std::is_same_v<S, Line>) {
          return along(s.point, s.direction, -inf, inf);
        } else {
          // the Euclidean nearest point is exact and bounds the lp distance from
          // above; the lp solve only refines it when x is clearly outside
          const double euclid = space.norm(x - detail::euclidean_nearest(s.vertices, x));
          double scale = space.norm(x);
          for (const auto& v : s.vertices) scale = std::max(scale, space.norm(v));
          if (space.p() == 2.0 || euclid <= 1e-12 * (1.0 + scale)) return euclid;
          const auto fw =
              detail::frank_wolfe(f, s.vertices, 1e-30 * (1.0 + scale * scale), 10000, 1e-8);
          return std::min(euclid, space.norm(x - fw.point));
        }
      },
      set.shape());
}

bool contains(const LpSpace& space, const ConvexSet& set, const PrimalVector& x, double tol) {
  if (!(tol >= 0.0)) throw InvalidArgument("tolerance must be nonnegative");
  return distance(space, set, x) <= tol;
}

PrimalVector lmo(const ConvexSet& set, const DualVector& psi) {
  if (psi.size() != set.dimension()) throw DimensionMismatch(set.dimension(), psi.size());
  return std::visit(
      [&](const auto& s) -> PrimalVector {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Segment>) {
          return dot(psi, s.b) < dot(psi, s.a) ? s.b : s.a;
        } else if constexpr (std::is_same_v<S, Ray>) {
          const double slope = dot(psi, s.direction);
          if (slope < 0.0 && !negligible_slope(slope, psi, s.direction)) {
            throw Unbounded("linear form is unbounded below on the ray");
          }
          return s.vertex;
        } else if constexpr (std::is_same_v<S, Line>) {
          const double slope = dot(psi, s.direction);
          if (!negligible_slope(slope, psi, s.direction)) {
            throw Unbounded("linear form is unbounded below on the line");
          }
          return s.point;
        } else {
          std::size_t best = 0;
          double best_value = dot(psi, s.vertices[0]);
          for (std::size_t i = 1; i < s.vertices.size(); ++i) {
            const double v = dot(psi, s.vertices[i]);
            if (v < best_value) {
              best_value = v;
              best = i;
            }
          }
          return s.vertices[best];
        }
      },
      set.shape());
}

std::vector<PrimalVector> vertices(const ConvexSet& set) {
  if (const auto* seg = std::get_if<Segment>(&set.shape())) return {seg->a, seg->b};
  if (const auto* hull = std::get_if<PolytopeHull>(&set.shape())) return hull->vertices;
  throw NotPolyhedral(std::string("vertex list requested for a ") +
                      std::string(set.type_name()));
}

}  // namespace banproj
