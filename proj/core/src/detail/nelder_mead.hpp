#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

namespace banproj::detail {

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t iterations = 0;
};

/// Plain Nelder-Mead (reflection 1, expansion 2, contraction 1/2, shrink 1/2)
/// started from an axis-aligned simplex of size `step` around x0.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    std::vector<double> x0, double step,
                                    std::size_t max_iterations) {
  const std::size_t m = x0.size();
  std::vector<std::vector<double>> simplex(m + 1, x0);
  for (std::size_t i = 0; i < m; ++i) simplex[i + 1][i] += step;
  std::vector<double> values(m + 1);
  for (std::size_t i = 0; i <= m; ++i) values[i] = f(simplex[i]);

  std::vector<std::size_t> order(m + 1);
  std::vector<double> centroid(m), trial(m), trial2(m);
  auto along = [&](double coef, const std::vector<double>& from, std::vector<double>& out) {
    for (std::size_t j = 0; j < m; ++j) out[j] = centroid[j] + coef * (from[j] - centroid[j]);
  };

  std::size_t it = 0;
  for (; it < max_iterations; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[m - 1];
    if (values[worst] - values[best] <= 1e-15 * (1.0 + std::abs(values[best]))) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < m; ++j) centroid[j] += simplex[i][j] / static_cast<double>(m);
    }

    along(-1.0, simplex[worst], trial);
    const double fr = f(trial);
    if (fr < values[best]) {
      along(-2.0, simplex[worst], trial2);
      const double fe = f(trial2);
      if (fe < fr) {
        simplex[worst] = trial2;
        values[worst] = fe;
      } else {
        simplex[worst] = trial;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = trial;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    along(outside ? -0.5 : 0.5, simplex[worst], trial2);
    const double fc = f(trial2);
    if (fc < std::min(fr, values[worst])) {
      simplex[worst] = trial2;
      values[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < m; ++j)
        simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
      values[i] = f(simplex[i]);
    }
  }

  const auto best = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
  return {simplex[best], values[best], it};
}

}  // namespace banproj::detail
