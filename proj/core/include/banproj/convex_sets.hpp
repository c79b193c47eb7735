#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "banproj/lp_space.hpp"

namespace banproj {

/// {a + t(b - a) : t in [0, 1]}; a == b is a singleton.
struct Segment {
  PrimalVector a;
  PrimalVector b;
};

/// {vertex + t*direction : t >= 0}
struct Ray {
  PrimalVector vertex;
  PrimalVector direction;
};

/// {point + t*direction : t real}
struct Line {
  PrimalVector point;
  PrimalVector direction;
};

/// Convex hull of a nonempty vertex list (V-representation).
struct PolytopeHull {
  std::vector<PrimalVector> vertices;
};

/// Immutable descriptor of one of the closed convex sets handled by the solvers.
class ConvexSet {
 public:
  using Shape = std::variant<Segment, Ray, Line, PolytopeHull>;

  static ConvexSet segment(PrimalVector a, PrimalVector b);
  static ConvexSet ray(PrimalVector vertex, PrimalVector direction);
  static ConvexSet line(PrimalVector point, PrimalVector direction);
  static ConvexSet polytope(std::vector<PrimalVector> vertices);

  const Shape& shape() const noexcept { return shape_; }
  std::size_t dimension() const noexcept { return dimension_; }
  /// "segment", "ray", "line" or "polytope".
  std::string_view type_name() const noexcept;
  /// Segments and polytopes: compact, vertex-certifiable.
  bool is_polyhedral() const noexcept;

 private:
  explicit ConvexSet(Shape shape, std::size_t dimension)
      : shape_(std::move(shape)), dimension_(dimension) {}

  Shape shape_;
  std::size_t dimension_;
};

/// Distance in the p-norm from x to the set.
double distance(const LpSpace& space, const ConvexSet& set, const PrimalVector& x);

/// True iff distance(x, set) <= tol.
bool contains(const LpSpace& space, const ConvexSet& set, const PrimalVector& x, double tol);

/// argmin over the set of <psi, z>. Polytopes return a minimizing vertex with
/// the lowest index. Throws Unbounded for a ray with <psi, d> < 0 or a line
/// with <psi, d> != 0.
PrimalVector lmo(const ConvexSet& set, const DualVector& psi);

/// Endpoints of a segment or the stored vertex list; NotPolyhedral otherwise.
std::vector<PrimalVector> vertices(const ConvexSet& set);

}  // namespace banproj
