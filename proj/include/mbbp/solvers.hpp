// SPDX-License-Identifier: Apache-2.0
//
// Exact branch-and-bound solvers for the maximum balanced biclique problem.
//
// Two search schemes:
//  * solve_bbclq       alternates the side being extended at every level,
//                      branching on the candidate of minimum degree. With
//                      precomputed per-vertex bounds it additionally gates
//                      every branch on the branch vertex's bound.
//  * solve_ext_uni_bbclq  enumerates subsets of U only; V survives as a
//                      filtered candidate pool. Branches on the candidate
//                      with the largest per-vertex bound.
//
// A node is one invocation of the recursive procedure, the root included.
// Time limits are polled every 1024 nodes; on expiry the incumbent found
// so far is returned with status TimeLimit (it is always a valid balanced
// biclique after trimming).
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mbbp/graph.hpp"
#include "mbbp/ubp.hpp"

namespace mbbp {

enum class SolveStatus { Optimal, TimeLimit };

struct SearchStats {
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
  SolveStatus status = SolveStatus::Optimal;
  int lb = 0;                  // best balanced half-size found
  int ubp_iterations = 0;      // 0 when the algorithm ran without bounds
  double ubp_seconds = 0.0;
};

struct SolveResult {
  Biclique best;
  int half_size = 0;
  SearchStats stats;
};

// Observation points for tests; ids are in the solver's frame (relevant
// only if the single-side solver had to swap U and V). All optional.
struct SearchHooks {
  std::function<void(int)> on_branch;      // vertex picked at a branch step
  std::function<void(int, int)> on_node;   // (|A|, |B|) at node entry
  std::function<void(const std::vector<int>&, const std::vector<int>&)>
      on_incumbent;                        // sorted sides of a new incumbent
};

// The candidate of minimum degree in g, ties to the smallest id.
// Throws EmptyCandidates when the set is empty.
int branch_vertex_min_degree(const BipartiteGraph& g,
                             const std::vector<int>& candidates);

// Equalizes part sizes by dropping the largest ids of the bigger part.
// Inputs must be sorted ascending; orientation is the caller's business.
Biclique make_balance(std::vector<int> a, std::vector<int> b);

SolveResult solve_bbclq(const BipartiteGraph& g,
                        const UpperBounds* bounds = nullptr,
                        std::optional<double> time_limit_seconds = {},
                        const SearchHooks* hooks = nullptr);

SolveResult solve_ext_uni_bbclq(const BipartiteGraph& g,
                                const UpperBounds& bounds,
                                std::optional<double> time_limit_seconds = {},
                                const SearchHooks* hooks = nullptr);

enum class Algo { Bbclq, ExtBbclq, ExtUniBbclq, Oracle };

// Tags: bbclq, extbbclq, extunibbclq, oracle. Throws UnknownAlgorithm.
Algo parse_algo(const std::string& tag);
std::string algo_name(Algo a);

// Dispatcher: computes upper bounds first for the algorithms that consume
// them (that time counts against the limit and is reported in the stats),
// then runs the search. `oracle` runs the exhaustive reference instead.
SolveResult solve(const BipartiteGraph& g, Algo algo,
                  std::optional<double> time_limit_seconds = {},
                  int ubp_threshold = 30000);
SolveResult solve(const BipartiteGraph& g, const std::string& algo_tag,
                  std::optional<double> time_limit_seconds = {},
                  int ubp_threshold = 30000);

}  // namespace mbbp
