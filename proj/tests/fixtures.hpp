// SPDX-License-Identifier: Apache-2.0
// Shared test fixtures. The 5x5 sample graph is small enough to reason
// about by hand yet rich enough to exercise every bound stage.
#pragma once

#include <string>
#include <vector>

#include "mbbp/graph.hpp"

namespace fixtures {

// 5+5 vertices, 13 edges, optimum half size 2.
inline mbbp::BipartiteGraph sample_graph() {
  return mbbp::BipartiteGraph::build(
      5, 5,
      {{1, 6},
       {1, 7},
       {2, 7},
       {2, 8},
       {2, 9},
       {3, 7},
       {3, 8},
       {3, 9},
       {4, 6},
       {4, 9},
       {4, 10},
       {5, 8},
       {5, 10}});
}

inline std::string test_dir() { return MBBP_TEST_DIR; }

inline std::string golden(const std::string& name) {
  return test_dir() + "/golden/" + name;
}

// Complete bipartite graph K_{a,b}.
inline mbbp::BipartiteGraph complete(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) edges.emplace_back(i, a + j);
  return mbbp::BipartiteGraph::build(a, b, edges);
}

}  // namespace fixtures
