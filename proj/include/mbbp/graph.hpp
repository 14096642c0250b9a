// SPDX-License-Identifier: Apache-2.0
//
// Immutable bipartite graph over two disjoint vertex sides U and V.
//
// Vertices carry global 1-based ids: U = {1, ..., u_count} and
// V = {u_count + 1, ..., u_count + v_count}. Adjacency lists store global
// ids and are kept sorted ascending so that membership tests are binary
// searches and set intersections are linear merges.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mbbp {

enum class Side { U, V };

// A (not necessarily balanced) biclique: side_a lists U-vertices, side_b
// lists V-vertices, both sorted ascending.
struct Biclique {
  std::vector<int> side_a;
  std::vector<int> side_b;
};

class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  // Validates ids and rejects duplicate pairs, then freezes the graph.
  // Edges are (u, v) with u in U and v in V, in any order.
  static BipartiteGraph build(int u_count, int v_count,
                              const std::vector<std::pair<int, int>>& edges);

  int u_count() const { return u_count_; }
  int v_count() const { return v_count_; }
  int vertex_count() const { return u_count_ + v_count_; }
  std::int64_t edge_count() const { return edge_count_; }

  bool valid_id(int v) const { return v >= 1 && v <= vertex_count(); }
  bool is_u(int v) const { return v >= 1 && v <= u_count_; }
  Side side_of(int v) const;

  // Sorted ascending, global ids. Throws InvalidVertex on a bad id.
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  // All non-adjacent (u, v) pairs in row-major order (u ascending, then v
  // ascending). Complement of the edge set within U x V.
  std::vector<std::pair<int, int>> non_edges() const;

  // True iff side_a is a set of U-ids, side_b a set of V-ids, the two sides
  // have equal size, and every cross pair is an edge. The empty biclique
  // passes. Throws InvalidVertex on ids outside the graph.
  bool verify_balanced_biclique(const Biclique& c) const;

 private:
  void check_vertex(int v) const;

  int u_count_ = 0;
  int v_count_ = 0;
  std::int64_t edge_count_ = 0;
  std::vector<std::vector<int>> adj_;  // adj_[id - 1], sorted ascending
};

// Returns the same graph with the sides exchanged: old V-vertex u_count + j
// becomes j, old U-vertex i becomes v_count + i.
BipartiteGraph swap_sides(const BipartiteGraph& g);

}  // namespace mbbp
