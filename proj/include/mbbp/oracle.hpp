// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive reference answers for small instances. Plain subset
// enumeration, deliberately free of any solver-style pruning, so results
// can anchor tests of the branch-and-bound code.
#pragma once

#include <cstdint>
#include <optional>

#include "mbbp/graph.hpp"

namespace mbbp {

// Hard cap on the enumerated side: at most 2^25 subsets.
inline constexpr int kOracleSideBudget = 25;

struct OracleResult {
  int half_size = 0;
  Biclique witness;
  std::uint64_t subsets = 0;   // leaves visited
  bool hit_time_limit = false; // only with the deadline overload
};

// Maximum balanced biclique half-size, by enumerating every subset A of the
// smaller side (ties go to U) and intersecting neighborhoods: the optimum
// is max over A of min(|A|, |common neighborhood of A|). The witness takes
// the smallest-id vertices of each part. Throws BudgetExceeded when
// min(|U|, |V|) exceeds the budget.
OracleResult brute_force_max_balanced(const BipartiteGraph& g);

// Same, but stops early (returning the best found so far) once
// `time_limit_seconds` elapses; the limit is polled every 1024 subsets.
OracleResult brute_force_max_balanced(const BipartiteGraph& g,
                                      std::optional<double> time_limit_seconds);

// Largest half-size over balanced bicliques that contain vertex v. Exact,
// same enumeration budget. Used to check per-vertex upper bounds.
int vertex_bound(const BipartiteGraph& g, int v);

}  // namespace mbbp
