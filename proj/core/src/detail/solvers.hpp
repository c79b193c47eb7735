#pragma once

#include <cstddef>
#include <vector>

#include "banproj/lp_space.hpp"

namespace banproj::detail {

/// Smooth convex objective over X together with its gradient, a functional G
/// with d/ds f(z + s h) = <G(z), h>.
///   Distance:  f(z) = |x - z|_p^2,          G(z) = -2 J(x - z)
///   Lyapunov:  f(z) = V(psi, z),            G(z) = 2 (J z - psi)
class Objective {
 public:
  static Objective distance_to(const LpSpace& space, PrimalVector x);
  static Objective lyapunov(const LpSpace& space, DualVector psi);

  double value(const PrimalVector& z) const;
  DualVector gradient(const PrimalVector& z) const;
  /// Sign-faithful directional derivative along h at z.
  double slope(const PrimalVector& z, const PrimalVector& h) const;

 private:
  Objective(const LpSpace& space, bool is_distance, PrimalVector x, DualVector psi)
      : space_(&space), is_distance_(is_distance), x_(std::move(x)), psi_(std::move(psi)) {}

  const LpSpace* space_;
  bool is_distance_;
  PrimalVector x_;
  DualVector psi_;
};

struct LineSearchResult {
  double t = 0.0;
  std::size_t iterations = 0;
};

/// Minimizes f(base + t*dir) over t in [lo, hi] (either bound may be infinite)
/// by bisection on the sign of the derivative. Infinite bounds are bracketed by
/// doubling; failure to bracket throws Unbounded.
LineSearchResult minimize_on_path(const Objective& f, const PrimalVector& base,
                                  const PrimalVector& dir, double lo, double hi,
                                  std::size_t max_iterations = 200);

struct FrankWolfeResult {
  PrimalVector point;
  std::vector<double> weights;
  double gap = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Pairwise Frank-Wolfe over conv(vertices) with exact line search, tracking
/// barycentric weights. Stops when the Frank-Wolfe gap <G(z), z - s> is at most
/// max(tol, rel_tol * f(z)). Vertex ties are broken by lowest index.
FrankWolfeResult frank_wolfe(const Objective& f, const std::vector<PrimalVector>& vertices,
                             double tol, std::size_t max_iterations = 10000,
                             double rel_tol = 0.0);

/// Euclidean nearest point of conv(vertices) to x by Wolfe's minimum-norm-point
/// method. Finite; exact up to rounding for affinely independent corrals.
PrimalVector euclidean_nearest(const std::vector<PrimalVector>& vertices, const PrimalVector& x);

}  // namespace banproj::detail
