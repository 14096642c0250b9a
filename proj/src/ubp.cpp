// SPDX-License-Identifier: Apache-2.0
#include "mbbp/ubp.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <unordered_map>

namespace mbbp {

int h_index(std::vector<int> values) {
  std::sort(values.begin(), values.end(), std::greater<int>());
  // Largest x in [0, m] with values[x-1] >= x; the predicate is monotone.
  int lo = 0, hi = static_cast<int>(values.size());
  while (lo < hi) {
    int mid = lo + (hi - lo + 1) / 2;
    if (values[mid - 1] >= mid) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

UpperBounds initial_bounds(const BipartiteGraph& g) {
  UpperBounds b;
  b.ub.resize(g.vertex_count());
  for (int v = 1; v <= g.vertex_count(); ++v) b.ub[v - 1] = g.degree(v);
  return b;
}

namespace {

std::pair<int, int> side_range(const BipartiteGraph& g, Side side) {
  return side == Side::U
             ? std::pair{1, g.u_count()}
             : std::pair{g.u_count() + 1, g.u_count() + g.v_count()};
}

}  // namespace

UpperBounds common_neighbor_refine(const BipartiteGraph& g, UpperBounds bounds,
                                   Side side, int dense_limit) {
  auto [first, last] = side_range(g, side);
  int size = last - first + 1;
  if (size == 0) return bounds;
  auto [ofirst, olast] = side_range(g, side == Side::U ? Side::V : Side::U);

  if (size <= dense_limit) {
    // w[a][b] = number of common neighbors of side vertices a and b,
    // accumulated from the opposite side (w[a][a] ends up as deg(a)).
    std::vector<std::vector<int>> w(size, std::vector<int>(size, 0));
    for (int k = ofirst; k <= olast; ++k) {
      const auto& nk = g.neighbors(k);
      for (int a : nk)
        for (int b : nk) ++w[a - first][b - first];
    }
    for (int v = first; v <= last; ++v) {
      int y = h_index(w[v - first]);
      bounds.ub[v - 1] = std::min(bounds.ub[v - 1], y);
    }
  } else {
    // Same counts, one vertex at a time through its two-hop neighborhood.
    std::unordered_map<int, int> cnt;
    for (int v = first; v <= last; ++v) {
      cnt.clear();
      for (int k : g.neighbors(v))
        for (int u : g.neighbors(k)) ++cnt[u];
      std::vector<int> values;
      values.reserve(cnt.size());
      for (const auto& kv : cnt) values.push_back(kv.second);
      int y = h_index(std::move(values));
      bounds.ub[v - 1] = std::min(bounds.ub[v - 1], y);
    }
  }
  return bounds;
}

UpperBounds propagate(const BipartiteGraph& g, UpperBounds bounds) {
  int sweeps = 0;
  bool changed = true;
  std::vector<int> values;
  while (changed) {
    changed = false;
    ++sweeps;
    for (int v = 1; v <= g.vertex_count(); ++v) {
      const auto& nb = g.neighbors(v);
      values.clear();
      for (int u : nb) values.push_back(bounds.ub[u - 1]);
      int z = h_index(values);
      if (z < bounds.ub[v - 1]) {
        bounds.ub[v - 1] = z;
        changed = true;
      }
    }
  }
  bounds.iterations = sweeps;
  return bounds;
}

UpperBounds run_ubp(const BipartiteGraph& g, int threshold) {
  auto t0 = std::chrono::steady_clock::now();
  UpperBounds b = initial_bounds(g);
  if (g.u_count() < threshold)
    b = common_neighbor_refine(g, std::move(b), Side::U);
  if (g.v_count() < threshold)
    b = common_neighbor_refine(g, std::move(b), Side::V);
  b = propagate(g, std::move(b));
  b.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return b;
}

}  // namespace mbbp
