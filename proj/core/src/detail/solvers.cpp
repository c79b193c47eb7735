#include "detail/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "banproj/errors.hpp"

namespace banproj::detail {

Objective Objective::distance_to(const LpSpace& space, PrimalVector x) {
  space.check_dimension(x.size());
  return Objective(space, true, std::move(x), DualVector::zeros(space.n()));
}

Objective Objective::lyapunov(const LpSpace& space, DualVector psi) {
  space.check_dimension(psi.size());
  return Objective(space, false, PrimalVector::zeros(space.n()), std::move(psi));
}

double Objective::value(const PrimalVector& z) const {
  if (is_distance_) {
    const double d = space_->norm(x_ - z);
    return d * d;
  }
  return space_->lyapunov(psi_, z);
}

DualVector Objective::gradient(const PrimalVector& z) const {
  if (is_distance_) return -2.0 * space_->duality_map(x_ - z);
  return 2.0 * (space_->duality_map(z) - psi_);
}

double Objective::slope(const PrimalVector& z, const PrimalVector& h) const {
  return space_->pair(gradient(z), h);
}

LineSearchResult minimize_on_path(const Objective& f, const PrimalVector& base,
                                  const PrimalVector& dir, double lo, double hi,
                                  std::size_t max_iterations) {
  LineSearchResult out;
  if (dir.is_zero()) {
    out.t = std::clamp(0.0, lo, hi);
    return out;
  }
  auto slope = [&](double t) {
    ++out.iterations;
    return f.slope(base + t * dir, dir);
  };

  constexpr int kMaxDoublings = 1000;
  if (std::isinf(lo)) {
    double a = std::min(-1.0, std::isinf(hi) ? -1.0 : hi - 1.0);
    int k = 0;
    while (slope(a) > 0.0) {
      if (++k > kMaxDoublings || !std::isfinite(2.0 * a)) {
        throw Unbounded("objective decreases without bound along the path");
      }
      a *= 2.0;
    }
    lo = a;
  }
  if (std::isinf(hi)) {
    double b = std::max(1.0, lo + 1.0);
    int k = 0;
    while (slope(b) < 0.0) {
      if (++k > kMaxDoublings || !std::isfinite(2.0 * b)) {
        throw Unbounded("objective decreases without bound along the path");
      }
      b *= 2.0;
    }
    hi = b;
  }

  if (slope(lo) >= 0.0) {
    out.t = lo;
    return out;
  }
  if (slope(hi) <= 0.0) {
    out.t = hi;
    return out;
  }
  // Invariant: slope(lo) < 0 < slope(hi).
  for (std::size_t it = 0; it < max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (slope(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  out.t = 0.5 * (lo + hi);
  return out;
}

namespace {

PrimalVector combine(const std::vector<PrimalVector>& vertices, const std::vector<double>& w) {
  std::vector<double> z(vertices.front().size(), 0.0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (w[i] == 0.0) continue;
    for (std::size_t j = 0; j < z.size(); ++j) z[j] += w[i] * vertices[i][j];
  }
  return PrimalVector(std::move(z));
}

double dot(const DualVector& g, const PrimalVector& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += g[i] * v[i];
  return s;
}

}  // namespace

FrankWolfeResult frank_wolfe(const Objective& f, const std::vector<PrimalVector>& vertices,
                             double tol, std::size_t max_iterations, double rel_tol) {
  const std::size_t m = vertices.size();
  FrankWolfeResult out;
  out.weights.assign(m, 0.0);

  std::size_t start = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    const double v = f.value(vertices[i]);
    if (v < best) {
      best = v;
      start = i;
    }
  }
  out.weights[start] = 1.0;
  PrimalVector z = vertices[start];

  std::vector<double> scores(m);
  std::size_t stalled = 0;
  for (;;) {
    const DualVector g = f.gradient(z);
    for (std::size_t i = 0; i < m; ++i) scores[i] = dot(g, vertices[i]);
    const double at_z = dot(g, z);

    std::size_t toward = 0;
    for (std::size_t i = 1; i < m; ++i) {
      if (scores[i] < scores[toward]) toward = i;
    }
    std::size_t away = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (out.weights[i] > 0.0 && (away == m || scores[i] > scores[away])) away = i;
    }
    out.gap = at_z - scores[toward];
    if (out.gap <= tol || (rel_tol > 0.0 && out.gap <= rel_tol * f.value(z))) {
      out.converged = true;
      break;
    }
    if (out.iterations >= max_iterations || stalled > 50) break;
    ++out.iterations;

    // pairwise step: shift weight from the away vertex to the toward vertex
    const PrimalVector dir = vertices[toward] - vertices[away];
    const double max_step = out.weights[away];
    const double step = minimize_on_path(f, z, dir, 0.0, max_step).t;

    if (step <= 0.0) {
      ++stalled;
      continue;
    }
    stalled = 0;
    out.weights[toward] += step;
    out.weights[away] = step >= max_step ? 0.0 : out.weights[away] - step;
    double total = 0.0;
    for (double& w : out.weights) {
      if (w < 1e-300) w = 0.0;
      total += w;
    }
    for (double& w : out.weights) w /= total;
    z = combine(vertices, out.weights);
  }
  out.point = std::move(z);
  return out;
}

namespace {

using Vec = std::vector<double>;

double inner(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec mix(const std::vector<Vec>& pts, const std::vector<std::size_t>& corral, const Vec& w) {
  Vec z(pts.front().size(), 0.0);
  for (std::size_t k = 0; k < corral.size(); ++k) {
    for (std::size_t j = 0; j < z.size(); ++j) z[j] += w[k] * pts[corral[k]][j];
  }
  return z;
}

// Weights of the minimum-norm point of the affine hull of the corral:
// solve (1 1^T + P^T P) mu = 1, alpha = mu / sum(mu).
bool affine_minimizer(const std::vector<Vec>& pts, const std::vector<std::size_t>& corral,
                      Vec& alpha) {
  const auto k = static_cast<Eigen::Index>(corral.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Ones(k, k);
  for (std::size_t i = 0; i < corral.size(); ++i) {
    for (std::size_t j = 0; j < corral.size(); ++j) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +=
          inner(pts[corral[i]], pts[corral[j]]);
    }
  }
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  if (!lu.isInvertible()) return false;
  const Eigen::VectorXd mu = lu.solve(Eigen::VectorXd::Ones(k));
  const double total = mu.sum();
  if (!(total != 0.0) || !std::isfinite(total)) return false;
  alpha.assign(mu.data(), mu.data() + k);
  for (double& v : alpha) v /= total;
  return true;
}

}  // namespace

PrimalVector euclidean_nearest(const std::vector<PrimalVector>& vertices, const PrimalVector& x) {
  std::vector<Vec> pts;
  double scale = 0.0;
  for (const auto& v : vertices) {
    Vec d(x.size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = v[j] - x[j];
    scale = std::max(scale, inner(d, d));
    pts.push_back(std::move(d));
  }
  const double eps = 1e-15 * scale;

  std::size_t first = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (inner(pts[i], pts[i]) < inner(pts[first], pts[first])) first = i;
  }
  std::vector<std::size_t> corral{first};
  Vec lambda{1.0};
  Vec z = pts[first];

  const std::size_t max_major = 100 * (pts.size() + 1);
  for (std::size_t major = 0; major < max_major; ++major) {
    const double zz = inner(z, z);
    if (zz <= eps * 1e-15) break;
    std::size_t j = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (inner(z, pts[i]) < inner(z, pts[j])) j = i;
    }
    if (zz - inner(z, pts[j]) <= eps) break;
    if (std::find(corral.begin(), corral.end(), j) != corral.end()) break;
    corral.push_back(j);
    lambda.push_back(0.0);

    for (std::size_t minor = 0; minor <= pts.size(); ++minor) {
      Vec alpha;
      if (!affine_minimizer(pts, corral, alpha)) {
        // degenerate corral: drop the newest point and stop
        corral.pop_back();
        lambda.pop_back();
        major = max_major;
        break;
      }
      bool interior = true;
      for (double a : alpha) interior = interior && a > 1e-14;
      if (interior) {
        lambda = alpha;
        z = mix(pts, corral, lambda);
        break;
      }
      double theta = 1.0;
      for (std::size_t i = 0; i < corral.size(); ++i) {
        if (alpha[i] <= 1e-14) theta = std::min(theta, lambda[i] / (lambda[i] - alpha[i]));
      }
      std::vector<std::size_t> kept;
      Vec kept_lambda;
      for (std::size_t i = 0; i < corral.size(); ++i) {
        const double l = theta * alpha[i] + (1.0 - theta) * lambda[i];
        if (l > 1e-14) {
          kept.push_back(corral[i]);
          kept_lambda.push_back(l);
        }
      }
      if (kept.empty()) {
        kept.push_back(corral.front());
        kept_lambda.push_back(1.0);
      }
      double total = 0.0;
      for (double l : kept_lambda) total += l;
      for (double& l : kept_lambda) l /= total;
      corral = std::move(kept);
      lambda = std::move(kept_lambda);
      z = mix(pts, corral, lambda);
    }
  }

  Vec out(x.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = z[j] + x[j];
  return PrimalVector(std::move(out));
}

}  // namespace banproj::detail
