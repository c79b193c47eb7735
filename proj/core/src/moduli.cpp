#include "banproj/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "banproj/random.hpp"
#include "detail/nelder_mead.hpp"

namespace banproj {

namespace {

constexpr std::size_t kChunk = 512;

struct Candidate {
  double score = std::numeric_limits<double>::infinity();  // minimized
  std::vector<double> params;
};

/// Scores `samples` random 2n-vectors with `score` (smaller is better). Samples
/// are drawn in fixed-size chunks, chunk c from substream c of the seed, so the
/// winner does not depend on how chunks are spread over workers.
template <class Score>
Candidate best_sample(std::size_t dim, const SamplingBudget& budget, const Score& score) {
  const std::size_t chunks = (budget.samples + kChunk - 1) / kChunk;
  std::vector<Candidate> per_chunk(chunks);

  auto run_chunk = [&](std::size_t c) {
    Rng rng(substream_seed(budget.seed, c));
    const std::size_t begin = c * kChunk;
    const std::size_t end = std::min(budget.samples, begin + kChunk);
    Candidate best;
    for (std::size_t s = begin; s < end; ++s) {
      std::vector<double> params = gaussian_coords(rng, dim);
      const double value = score(params);
      if (value < best.score) best = {value, std::move(params)};
    }
    per_chunk[c] = std::move(best);
  };

  const unsigned workers = std::max(1u, budget.workers);
  if (workers == 1 || chunks <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t c = w; c < chunks; c += workers) run_chunk(c);
      });
    }
  }

  Candidate best;
  for (auto& c : per_chunk) {
    if (c.score < best.score) best = std::move(c);
  }
  return best;
}

/// Splits a 2n parameter vector into two unit vectors; false if either half vanishes.
bool unit_pair(const LpSpace& space, const std::vector<double>& params, std::vector<double>& u,
               std::vector<double>& d) {
  const std::size_t n = space.n();
  u.assign(params.begin(), params.begin() + static_cast<std::ptrdiff_t>(n));
  d.assign(params.begin() + static_cast<std::ptrdiff_t>(n), params.end());
  const double nu = lp::norm(u, space.p());
  const double nd = lp::norm(d, space.p());
  if (!(nu > 1e-300) || !(nd > 1e-300)) return false;
  for (double& c : u) c /= nu;
  for (double& c : d) c /= nd;
  return true;
}

/// 1 - lambda*, lambda* the largest center scale keeping lambda*u +- half*d in
/// the unit ball. Bisection keeps the lower end feasible, so the returned value
/// is attained by an actual feasible pair.
double convexity_gap(const LpSpace& space, double half, const std::vector<double>& params) {
  std::vector<double> u, d;
  if (!unit_pair(space, params, u, d)) return 1.0;
  const std::size_t n = space.n();
  std::vector<double> plus(n), minus(n);
  auto feasible = [&](double lambda) {
    for (std::size_t i = 0; i < n; ++i) {
      plus[i] = lambda * u[i] + half * d[i];
      minus[i] = lambda * u[i] - half * d[i];
    }
    return lp::norm(plus, space.p()) <= 1.0 && lp::norm(minus, space.p()) <= 1.0;
  };
  double lo = 0.0, hi = 1.0;
  if (feasible(hi)) return 0.0;
  for (int i = 0; i < 52; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 1.0 - lo;
}

double smoothness_excess(const LpSpace& space, double t, const std::vector<double>& params) {
  std::vector<double> x, y;
  if (!unit_pair(space, params, x, y)) return 0.0;
  const std::size_t n = space.n();
  std::vector<double> plus(n), minus(n);
  for (std::size_t i = 0; i < n; ++i) {
    plus[i] = x[i] + t * y[i];
    minus[i] = x[i] - t * y[i];
  }
  return 0.5 * (lp::norm(plus, space.p()) + lp::norm(minus, space.p())) - 1.0;
}

std::vector<double> normalized_start(const LpSpace& space, const std::vector<double>& params) {
  std::vector<double> u, d;
  if (!unit_pair(space, params, u, d)) return params;
  u.insert(u.end(), d.begin(), d.end());
  return u;
}

}  // namespace

std::string_view to_string(BoundKind kind) {
  return kind == BoundKind::upper_bound_of_inf ? "upper_bound_of_inf" : "lower_bound_of_sup";
}

ModulusEstimate modulus_convexity(const LpSpace& space, double eps, const SamplingBudget& budget) {
  if (!(eps >= 0.0 && eps <= 2.0)) {
    throw InvalidArgument("modulus of convexity needs eps in [0, 2]");
  }
  ModulusEstimate est;
  est.argument = eps;
  est.bound_kind = BoundKind::upper_bound_of_inf;
  if (eps == 0.0) return est;  // x = y is feasible

  const double half = 0.5 * eps;
  auto score = [&](const std::vector<double>& params) {
    return convexity_gap(space, half, params);
  };
  Candidate best = best_sample(2 * space.n(), budget, score);
  est.samples_used = budget.samples;
  double value = best.score;
  if (budget.refinement_steps > 0 && !best.params.empty()) {
    auto refined =
        detail::nelder_mead(score, normalized_start(space, best.params), 0.05,
                            budget.refinement_steps);
    est.refinement_iterations = refined.iterations;
    value = std::min(value, refined.value);
  }
  est.value = std::clamp(value, 0.0, 1.0);
  return est;
}

ModulusEstimate modulus_smoothness(const LpSpace& space, double t, const SamplingBudget& budget) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw InvalidArgument("modulus of smoothness needs t > 0");
  }
  ModulusEstimate est;
  est.argument = t;
  est.bound_kind = BoundKind::lower_bound_of_sup;

  auto score = [&](const std::vector<double>& params) {
    return -smoothness_excess(space, t, params);
  };
  Candidate best = best_sample(2 * space.n(), budget, score);
  est.samples_used = budget.samples;
  double value = best.params.empty() ? 0.0 : -best.score;
  if (budget.refinement_steps > 0 && !best.params.empty()) {
    auto refined = detail::nelder_mead(score, normalized_start(space, best.params), 0.05,
                                       budget.refinement_steps);
    est.refinement_iterations = refined.iterations;
    value = std::max(value, -refined.value);
  }
  // (|x+y| + |x-y|)/2 >= max(|x|, |y|) holds for every pair, so this floor
  // keeps the estimate a lower bound.
  est.value = std::max(value, std::max(0.0, t - 1.0));
  return est;
}

KrEstimate kr_constant(const LpSpace& space, const PrimalVector& x, const PrimalVector& proj,
                       double gamma, const SamplingBudget& budget) {
  if (!(gamma > 1.0)) throw InvalidArgument("Figiel constant must exceed 1");
  const double dist = space.norm(x - proj);
  if (dist == 0.0) throw PreconditionError("K_R is undefined when x equals its projection");
  KrEstimate kr;
  kr.gamma = gamma;
  kr.distance = dist;
  kr.radius = std::max(space.norm(x), space.norm(proj));
  kr.delta = modulus_convexity(space, std::min(2.0, dist / (2.0 * kr.radius)), budget);
  kr.rho = modulus_smoothness(space, 16.0 * gamma * dist / kr.radius, budget);
  kr.raw_ratio = kr.rho.value > 0.0 ? kr.delta.value / kr.rho.value
                                    : std::numeric_limits<double>::infinity();
  kr.clamped = kr.raw_ratio > 1.0;
  kr.value = std::min(kr.raw_ratio, 1.0);
  return kr;
}

FigielDiagnostic figiel_check(const LpSpace& space, const PrimalVector& x, const PrimalVector& y,
                              double gamma, const SamplingBudget& budget) {
  if (!(gamma > 1.0)) throw InvalidArgument("Figiel constant must exceed 1");
  const PrimalVector diff = x - y;
  const double dist = space.norm(diff);
  if (dist == 0.0) throw PreconditionError("figiel_check needs x != y");

  FigielDiagnostic diag;
  diag.x = x;
  diag.y = y;
  diag.gamma = gamma;
  diag.radius = std::max(space.norm(x), space.norm(y));
  const DualVector jdiff = space.duality_map(x) - space.duality_map(y);
  diag.lhs_monotone = space.pair(jdiff, diff);
  diag.lhs_lipschitz = space.dual_norm(jdiff);

  const double r2 = diag.radius * diag.radius;
  diag.delta = modulus_convexity(space, std::min(2.0, dist / (2.0 * diag.radius)), budget);
  diag.rho = modulus_smoothness(space, 16.0 * gamma * dist / diag.radius, budget);
  diag.rhs_monotone = r2 / (2.0 * gamma) * diag.delta.value;
  diag.rhs_lipschitz = r2 / (2.0 * gamma * dist) * diag.rho.value;
  diag.monotone_holds = diag.lhs_monotone >= diag.rhs_monotone;
  diag.lipschitz_holds = diag.lhs_lipschitz <= diag.rhs_lipschitz;
  return diag;
}

}  // namespace banproj
