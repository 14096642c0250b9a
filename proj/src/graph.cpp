// SPDX-License-Identifier: Apache-2.0
#include "mbbp/graph.hpp"

#include <algorithm>
#include <string>

#include "mbbp/errors.hpp"

namespace mbbp {

BipartiteGraph BipartiteGraph::build(
    int u_count, int v_count, const std::vector<std::pair<int, int>>& edges) {
  if (u_count < 0 || v_count < 0)
    throw InvalidVertex("negative side cardinality");
  BipartiteGraph g;
  g.u_count_ = u_count;
  g.v_count_ = v_count;
  g.adj_.assign(static_cast<std::size_t>(u_count) + v_count, {});
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > u_count)
      throw InvalidVertex("edge endpoint " + std::to_string(u) +
                          " is not a U vertex");
    if (v <= u_count || v > u_count + v_count)
      throw InvalidVertex("edge endpoint " + std::to_string(v) +
                          " is not a V vertex");
    g.adj_[u - 1].push_back(v);
    g.adj_[v - 1].push_back(u);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  for (int u = 1; u <= u_count; ++u) {
    const auto& list = g.adj_[u - 1];
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end())
      throw DuplicateEdge("duplicate edge (" + std::to_string(u) + ", " +
                          std::to_string(*dup) + ")");
    g.edge_count_ += static_cast<std::int64_t>(list.size());
  }
  return g;
}

Side BipartiteGraph::side_of(int v) const {
  check_vertex(v);
  return v <= u_count_ ? Side::U : Side::V;
}

const std::vector<int>& BipartiteGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v - 1];
}

int BipartiteGraph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v - 1].size());
}

bool BipartiteGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& list = adj_[u - 1];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> BipartiteGraph::non_edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(u_count_) * v_count_ -
              static_cast<std::size_t>(edge_count_));
  for (int u = 1; u <= u_count_; ++u) {
    const auto& list = adj_[u - 1];
    std::size_t k = 0;
    for (int v = u_count_ + 1; v <= u_count_ + v_count_; ++v) {
      if (k < list.size() && list[k] == v) {
        ++k;
      } else {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

bool BipartiteGraph::verify_balanced_biclique(const Biclique& c) const {
  for (int a : c.side_a) {
    check_vertex(a);
    if (!is_u(a)) return false;
  }
  for (int b : c.side_b) {
    check_vertex(b);
    if (is_u(b)) return false;
  }
  if (c.side_a.size() != c.side_b.size()) return false;
  auto has_duplicate = [](std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    return std::adjacent_find(ids.begin(), ids.end()) != ids.end();
  };
  if (has_duplicate(c.side_a) || has_duplicate(c.side_b)) return false;
  for (int a : c.side_a)
    for (int b : c.side_b)
      if (!has_edge(a, b)) return false;
  return true;
}

void BipartiteGraph::check_vertex(int v) const {
  if (!valid_id(v))
    throw InvalidVertex("vertex id " + std::to_string(v) + " out of range");
}

BipartiteGraph swap_sides(const BipartiteGraph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()));
  for (int u = 1; u <= g.u_count(); ++u)
    for (int v : g.neighbors(u))
      edges.emplace_back(v - g.u_count(), g.v_count() + u);
  return BipartiteGraph::build(g.v_count(), g.u_count(), edges);
}

}  // namespace mbbp
