#pragma once

// Brute-force reference minimizers. They only use the space's norm and
// Lyapunov functional, never the solvers under test.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "banproj/lp_space.hpp"

namespace banproj::testing {

/// argmin of f over the grid t = 0, step, 2 step, ..., 1.
inline double grid_argmin(const std::function<double(double)>& f, double step = 1e-5) {
  const auto steps = static_cast<std::size_t>(std::llround(1.0 / step));
  double best_t = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) * step;
    const double v = f(t);
    if (v < best) {
      best = v;
      best_t = t;
    }
  }
  return best_t;
}

/// Minimizes f over barycentric weights of 2 or 3 vertices: the exhaustive
/// grid at resolution 1/50, then finer grids (spacing / 10 per level) over
/// +-2 coarse cells around the incumbent.
inline std::vector<double> barycentric_argmin(
    const std::function<double(const std::vector<double>&)>& f, std::size_t k) {
  auto weights = [k](double a, double b) {
    return k == 2 ? std::vector<double>{a, 1.0 - a} : std::vector<double>{a, b, 1.0 - a - b};
  };
  auto feasible = [k](double a, double b) {
    return a >= 0.0 && a <= 1.0 && (k == 2 || (b >= 0.0 && a + b <= 1.0));
  };
  std::vector<double> best_w = weights(1.0, 0.0);
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](double a, double b) {
    if (!feasible(a, b)) return;
    const std::vector<double> w = weights(std::clamp(a, 0.0, 1.0), std::clamp(b, 0.0, 1.0 - a));
    const double v = f(w);
    if (v < best) {
      best = v;
      best_w = w;
    }
  };
  constexpr int kRes = 50;
  const int jmax = k == 2 ? 0 : kRes;
  for (int i = 0; i <= kRes; ++i) {
    for (int j = 0; j <= jmax; ++j) consider(i / double(kRes), j / double(kRes));
  }
  double h = 1.0 / kRes;
  for (int level = 0; level < 5; ++level) {
    const double a0 = best_w[0];
    const double b0 = k == 2 ? 0.0 : best_w[1];
    h /= 10.0;
    constexpr int kSpan = 20;
    const int js = k == 2 ? 0 : kSpan;
    for (int i = -kSpan; i <= kSpan; ++i) {
      for (int j = -js; j <= js; ++j) consider(a0 + i * h, b0 + j * h);
    }
  }
  return best_w;
}

}  // namespace banproj::testing
