#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace cornersearch::detail {

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t iterations = 0;
};

// Plain Nelder-Mead with the standard coefficients (1, 2, 0.5, 0.5). The
// objective may return +inf for rejected points.
template <class Objective>
SimplexResult nelder_mead(Objective&& f, std::vector<double> start, double initial_step,
                          std::size_t max_iterations, double value_tol = 1e-15, double size_tol = 1e-12) {
  const std::size_t m = start.size();
  std::vector<std::vector<double>> simplex(m + 1, start);
  for (std::size_t k = 0; k < m; ++k) simplex[k + 1][k] += initial_step;
  std::vector<double> values(m + 1);
  for (std::size_t k = 0; k <= m; ++k) values[k] = f(simplex[k]);

  std::vector<std::size_t> order(m + 1);
  std::vector<double> centroid(m), trial(m), trial2(m);
  const auto along = [&](const std::vector<double>& from, double t, std::vector<double>& out) {
    for (std::size_t j = 0; j < m; ++j) out[j] = centroid[j] + t * (from[j] - centroid[j]);
  };

  std::size_t it = 0;
  for (; it < max_iterations; ++it) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[m - 1];

    double spread = 0.0;
    for (std::size_t k = 0; k <= m; ++k) {
      for (std::size_t j = 0; j < m; ++j) spread = std::max(spread, std::abs(simplex[k][j] - simplex[best][j]));
    }
    if (std::isfinite(values[worst]) && values[worst] - values[best] <= value_tol * (1.0 + std::abs(values[best])) &&
        spread <= size_tol) {
      break;
    }
    if (spread <= size_tol * 1e-3) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k <= m; ++k) {
      if (k == worst) continue;
      for (std::size_t j = 0; j < m; ++j) centroid[j] += simplex[k][j];
    }
    for (double& v : centroid) v /= static_cast<double>(m);

    along(simplex[worst], -1.0, trial);
    const double reflected = f(trial);
    if (reflected < values[best]) {
      along(simplex[worst], -2.0, trial2);
      const double expanded = f(trial2);
      if (expanded < reflected) {
        simplex[worst] = trial2;
        values[worst] = expanded;
      } else {
        simplex[worst] = trial;
        values[worst] = reflected;
      }
      continue;
    }
    if (reflected < values[second]) {
      simplex[worst] = trial;
      values[worst] = reflected;
      continue;
    }
    const bool outside = reflected < values[worst];
    along(outside ? trial : simplex[worst], 0.5, trial2);
    const double contracted = f(trial2);
    if (contracted < (outside ? reflected : values[worst])) {
      simplex[worst] = trial2;
      values[worst] = contracted;
      continue;
    }
    for (std::size_t k = 0; k <= m; ++k) {
      if (k == best) continue;
      for (std::size_t j = 0; j < m; ++j) simplex[k][j] = simplex[best][j] + 0.5 * (simplex[k][j] - simplex[best][j]);
      values[k] = f(simplex[k]);
    }
  }

  const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  return {simplex[best], values[best], it};
}

}  // namespace cornersearch::detail
