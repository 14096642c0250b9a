// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fixtures.hpp"
#include "mbbp/errors.hpp"
#include "mbbp/graph.hpp"

using mbbp::Biclique;
using mbbp::BipartiteGraph;
using mbbp::Side;

TEST_SUITE("graph") {
  TEST_CASE("ids split into the two sides") {
    auto g = fixtures::sample_graph();
    CHECK(g.u_count() == 5);
    CHECK(g.v_count() == 5);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 13);
    CHECK(g.side_of(1) == Side::U);
    CHECK(g.side_of(5) == Side::U);
    CHECK(g.side_of(6) == Side::V);
    CHECK(g.side_of(10) == Side::V);
  }

  TEST_CASE("adjacency is sorted and mirrored") {
    auto g = fixtures::sample_graph();
    CHECK(g.neighbors(2) == std::vector<int>{7, 8, 9});
    CHECK(g.neighbors(7) == std::vector<int>{1, 2, 3});
    CHECK(g.degree(4) == 3);
    CHECK(g.degree(10) == 2);
    for (int v = 1; v <= g.vertex_count(); ++v) {
      const auto& nb = g.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (int w : nb) {
        const auto& back = g.neighbors(w);
        CHECK(std::binary_search(back.begin(), back.end(), v));
      }
    }
  }

  TEST_CASE("has_edge matches the edge list") {
    auto g = fixtures::sample_graph();
    CHECK(g.has_edge(1, 6));
    CHECK(g.has_edge(6, 1));
    CHECK_FALSE(g.has_edge(1, 8));
    CHECK_FALSE(g.has_edge(2, 3));
  }

  TEST_CASE("build rejects bad endpoints and duplicates") {
    CHECK_THROWS_AS(BipartiteGraph::build(2, 2, {{1, 2}}),
                    mbbp::InvalidVertex);
    CHECK_THROWS_AS(BipartiteGraph::build(2, 2, {{3, 4}}),
                    mbbp::InvalidVertex);
    CHECK_THROWS_AS(BipartiteGraph::build(2, 2, {{1, 5}}),
                    mbbp::InvalidVertex);
    CHECK_THROWS_AS(BipartiteGraph::build(2, 2, {{0, 3}}),
                    mbbp::InvalidVertex);
    CHECK_THROWS_AS(BipartiteGraph::build(2, 2, {{1, 3}, {1, 3}}),
                    mbbp::DuplicateEdge);
  }

  TEST_CASE("empty sides are allowed") {
    auto g = BipartiteGraph::build(0, 0, {});
    CHECK(g.vertex_count() == 0);
    CHECK(g.non_edges().empty());
    auto h = BipartiteGraph::build(3, 0, {});
    CHECK(h.u_count() == 3);
    CHECK(h.degree(2) == 0);
  }

  TEST_CASE("non_edges walks the grid row-major") {
    auto g = fixtures::sample_graph();
    std::vector<std::pair<int, int>> expected = {
        {1, 8}, {1, 9}, {1, 10}, {2, 6}, {2, 10}, {3, 6},
        {3, 10}, {4, 7}, {4, 8}, {5, 6}, {5, 7}, {5, 9}};
    CHECK(g.non_edges() == expected);
    CHECK(fixtures::complete(3, 4).non_edges().empty());
  }

  TEST_CASE("verify accepts the optimum and rejects impostors") {
    auto g = fixtures::sample_graph();
    CHECK(g.verify_balanced_biclique({{2, 3}, {7, 8}}));
    CHECK(g.verify_balanced_biclique({{}, {}}));
    CHECK(g.verify_balanced_biclique({{1}, {6}}));
    // Unbalanced.
    CHECK_FALSE(g.verify_balanced_biclique({{2}, {7, 8}}));
    // Missing edge 1-8.
    CHECK_FALSE(g.verify_balanced_biclique({{1, 2}, {7, 8}}));
    // Sides swapped.
    CHECK_FALSE(g.verify_balanced_biclique({{7, 8}, {2, 3}}));
    // Repeated member.
    CHECK_FALSE(g.verify_balanced_biclique({{2, 2}, {7, 8}}));
    // Out-of-range id.
    CHECK_THROWS_AS(g.verify_balanced_biclique({{2, 11}, {7, 8}}),
                    mbbp::InvalidVertex);
  }

  TEST_CASE("verify is order-insensitive") {
    auto g = fixtures::sample_graph();
    CHECK(g.verify_balanced_biclique({{3, 2}, {8, 7}}));
  }

  TEST_CASE("swap_sides relabels and preserves adjacency") {
    auto g = fixtures::sample_graph();
    auto s = mbbp::swap_sides(g);
    CHECK(s.u_count() == g.v_count());
    CHECK(s.v_count() == g.u_count());
    CHECK(s.edge_count() == g.edge_count());
    // Edge (u, v) becomes (v - u_count, v_count + u).
    for (int u = 1; u <= g.u_count(); ++u)
      for (int v : g.neighbors(u))
        CHECK(s.has_edge(v - g.u_count(), s.u_count() + u));
    // Double swap restores the original.
    auto back = mbbp::swap_sides(s);
    for (int u = 1; u <= g.u_count(); ++u)
      CHECK(back.neighbors(u) == g.neighbors(u));
  }
}
