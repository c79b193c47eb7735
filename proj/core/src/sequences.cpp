#include "banproj/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "banproj/random.hpp"

namespace banproj {

namespace {

constexpr double kFinalGap = 1e-8;

double query_norm(const LpSpace& space, const Query& v) {
  return std::visit(
      [&](const auto& x) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, PrimalVector>) {
          return space.norm(x);
        } else {
          return space.dual_norm(x);
        }
      },
      v);
}

Query query_difference(const Query& a, const Query& b) {
  if (a.index() != b.index()) throw InvalidArgument("sequence terms and limit must share a space");
  return std::visit(
      [&](const auto& av) -> Query {
        using V = std::decay_t<decltype(av)>;
        return av - std::get<V>(b);
      },
      a);
}

double perturbation_scale(double norm) { return norm > 0.0 ? 0.1 * norm : 0.1; }

template <class V, class Norm>
std::vector<V> perturb(const V& limit, std::uint64_t seed, std::size_t n_terms, Norm norm) {
  const auto mags = perturbation_magnitudes(n_terms, perturbation_scale(norm(limit)));
  std::vector<V> terms;
  terms.reserve(n_terms);
  for (std::size_t k = 0; k < n_terms; ++k) {
    Rng rng(substream_seed(seed, k));
    V d(gaussian_coords(rng, limit.size()));
    double len = norm(d);
    while (len < 1e-12) {
      d = V(gaussian_coords(rng, limit.size()));
      len = norm(d);
    }
    terms.push_back(limit + (mags[k] / len) * d);
  }
  return terms;
}

double tail_min(const std::vector<double>& values) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = values.size() / 2; k < values.size(); ++k) best = std::min(best, values[k]);
  return best;
}

void require_finite(const std::vector<double>& values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw Error("sequence trial produced a non-finite per-term value");
  }
}

std::vector<Query> as_queries(const auto& terms) {
  return std::vector<Query>(terms.begin(), terms.end());
}

SequenceTrial make_trial(std::string theorem, std::optional<ProjectionKind> kind, Query limit,
                         std::vector<Query> terms, const ConvexSet& set) {
  return SequenceTrial{std::move(theorem), kind, std::move(limit), std::move(terms), set, {},
                       0.0, 0.0, kTrialSlack, false, std::nullopt, std::nullopt};
}

}  // namespace

std::vector<double> perturbation_magnitudes(std::size_t n_terms, double c) {
  if (n_terms < 8) throw InvalidArgument("sequence trials need at least 8 terms");
  if (!(c >= 0.0) || !std::isfinite(c)) throw InvalidArgument("perturbation scale must be >= 0");
  const double h = static_cast<double>((n_terms + 1) / 2);
  std::vector<double> mags(n_terms);
  for (std::size_t k = 0; k < n_terms; ++k) {
    mags[k] = c * std::pow(10.0, -16.0 * static_cast<double>(k) / (h - 1.0));
  }
  return mags;
}

std::vector<PrimalVector> perturbed_sequence(const LpSpace& space, const PrimalVector& x,
                                             std::uint64_t seed, std::size_t n_terms) {
  space.check_dimension(x.size());
  return perturb(x, seed, n_terms, [&](const PrimalVector& v) { return space.norm(v); });
}

std::vector<DualVector> perturbed_sequence(const LpSpace& space, const DualVector& psi,
                                           std::uint64_t seed, std::size_t n_terms) {
  space.check_dimension(psi.size());
  return perturb(psi, seed, n_terms, [&](const DualVector& v) { return space.dual_norm(v); });
}

void check_convergence(const LpSpace& space, const Query& limit, const std::vector<Query>& terms) {
  if (terms.empty()) throw PreconditionError("sequence has no terms");
  // Rounding of limit + m d can move a gap by a few ulps of the limit.
  const double noise =
      8.0 * std::numeric_limits<double>::epsilon() * (1.0 + query_norm(space, limit));
  double previous = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const double gap = query_norm(space, query_difference(terms[k], limit));
    if (k >= terms.size() / 2) {
      if (gap > previous + noise) {
        throw PreconditionError("sequence gaps increase over the tail half");
      }
      previous = gap;
    }
    if (k + 1 == terms.size() && gap > kFinalGap) {
      throw PreconditionError("final term is farther than 1e-8 from the limit");
    }
  }
}

SequenceTrial lsc_distance_trial(const LpSpace& space, const ConvexSet& set, const PrimalVector& x,
                                 std::uint64_t seed, std::size_t n_terms) {
  const auto terms = perturbed_sequence(space, x, seed, n_terms);
  SequenceTrial trial = make_trial("3.2", std::nullopt, x, as_queries(terms), set);
  check_convergence(space, trial.limit, trial.terms);
  trial.per_term.reserve(terms.size());
  for (const auto& xk : terms) trial.per_term.push_back(distance(space, set, xk));
  require_finite(trial.per_term);
  trial.liminf_proxy = tail_min(trial.per_term);
  trial.target = distance(space, set, x);
  trial.passed = trial.target <= trial.liminf_proxy + trial.slack;
  return trial;
}

SequenceTrial graph_closedness_trial(const LpSpace& space, ProjectionKind kind,
                                     const ConvexSet& set, const Query& limit,
                                     std::vector<Query> terms, std::optional<PrimalVector> y) {
  if (kind == ProjectionKind::metric) {
    throw InvalidArgument("graph closedness trials take kind generalized or gmp");
  }
  check_query(kind, limit);
  for (const auto& t : terms) check_query(kind, t);
  check_convergence(space, limit, terms);

  SequenceTrial trial = make_trial(kind == ProjectionKind::generalized ? "3.4" : "3.6", kind,
                                   limit, std::move(terms), set);
  std::vector<PrimalVector> projections;
  projections.reserve(trial.terms.size());
  for (const auto& t : trial.terms) {
    projections.push_back(project(space, kind, set, t).point);
  }
  const PrimalVector target_y = y ? *y : projections.back();
  space.check_dimension(target_y.size());
  for (const auto& pk : projections) trial.per_term.push_back(space.norm(pk - target_y));
  require_finite(trial.per_term);
  for (std::size_t k = trial.per_term.size() / 2; k < trial.per_term.size(); ++k) {
    if (trial.per_term[k] > kTrialSlack) {
      throw PreconditionError("projections of the tail terms do not converge to y");
    }
  }
  trial.liminf_proxy = tail_min(trial.per_term);
  trial.y = target_y;
  trial.target = space.norm(project(space, kind, set, limit).point - target_y);
  trial.passed = trial.target <= trial.slack;
  return trial;
}

SequenceTrial graph_closedness_trial(const LpSpace& space, ProjectionKind kind,
                                     const ConvexSet& set, const Query& limit,
                                     std::optional<PrimalVector> y, std::size_t n_terms,
                                     std::uint64_t seed) {
  check_query(kind, limit);
  std::vector<Query> terms = std::visit(
      [&](const auto& v) { return as_queries(perturbed_sequence(space, v, seed, n_terms)); },
      limit);
  return graph_closedness_trial(space, kind, set, limit, std::move(terms), std::move(y));
}

SequenceTrial kr_liminf_trial(const LpSpace& space, const ConvexSet& set, const PrimalVector& x,
                              double gamma, std::size_t n_terms, std::uint64_t seed,
                              const SamplingBudget& budget) {
  if (!(gamma > 1.0)) throw InvalidArgument("gamma must exceed 1");
  const PrimalVector proj = generalized_metric_project(space, set, x).point;
  if (space.norm(x - proj) <= 1e-12 * (1.0 + space.norm(x))) {
    throw PreconditionError("kr_liminf_trial needs x outside C (x == Pi_C x)");
  }
  const auto terms = perturbed_sequence(space, x, seed, n_terms);
  SequenceTrial trial =
      make_trial("3.8", ProjectionKind::generalized_metric, x, as_queries(terms), set);
  check_convergence(space, trial.limit, trial.terms);
  for (const auto& xk : terms) {
    trial.per_term.push_back(space.norm(xk - generalized_metric_project(space, set, xk).point));
  }
  require_finite(trial.per_term);
  trial.liminf_proxy = tail_min(trial.per_term);
  trial.kr = kr_constant(space, x, proj, gamma, budget);
  trial.target = trial.kr->value * space.norm(x - proj);
  trial.passed = trial.target <= trial.liminf_proxy + trial.slack;
  return trial;
}

}  // namespace banproj
