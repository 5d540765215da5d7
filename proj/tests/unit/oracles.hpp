// Test-only reference implementations. Nothing here calls into the code path
// it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace wvkit::testing {

// Minimum weighted path length over every full binary tree with the given
// leaves, by DP over leaf subsets: cost(S) = weight(S) + min over splits
// cost(A) + cost(S \ A). Each internal node adds one level of depth to every
// leaf below it, so the subtree weights sum to the weighted path length.
inline std::uint64_t min_weighted_path_length(
    const std::vector<std::uint64_t>& freqs) {
  const std::size_t n = freqs.size();
  if (n <= 1) return 0;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint64_t> weight(full + 1, 0), cost(full + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      if (s & (1u << i)) weight[s] += freqs[i];
    }
  }
  for (std::uint32_t s = 1; s <= full; ++s) {
    if ((s & (s - 1)) == 0) continue;  // single leaf: no cost
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::uint32_t a = (s - 1) & s; a > 0; a = (a - 1) & s) {
      const std::uint32_t b = s ^ a;
      if (a < b) continue;  // each split once
      best = std::min(best, cost[a] + cost[b]);
    }
    cost[s] = best + weight[s];
  }
  return cost[full];
}

// Central finite difference of f with respect to x[i].
inline double central_difference(const std::function<double()>& f, double& x,
                                 double h) {
  const double saved = x;
  x = saved + h;
  const double up = f();
  x = saved - h;
  const double down = f();
  x = saved;
  return (up - down) / (2.0 * h);
}

inline double relative_error(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

}  // namespace wvkit::testing
