// SPDX-License-Identifier: Apache-2.0
//
// Per-vertex upper bounds on the half-size of any balanced biclique a
// vertex can participate in. Three tightening stages, each sound:
//
//   initial_bounds          ub_v = deg(v)
//   common_neighbor_refine  ub_v = min(ub_v, h-index of the common-neighbor
//                           counts w_vu over u in v's own side, u = v
//                           included with w_vv = deg(v))
//   propagate               fixed point of ub_v = min(ub_v, h-index of the
//                           bounds of v's neighbors), in-place sweeps in
//                           ascending id order until a sweep changes nothing
//
// Bounds only ever decrease, so every stage output stays an upper bound on
// the per-vertex optimum.
#pragma once

#include <vector>

#include "mbbp/graph.hpp"

namespace mbbp {

struct UpperBounds {
  std::vector<int> ub;           // indexed by vertex id - 1
  int iterations = 0;            // propagation sweeps, incl. the confirming one
  double elapsed_seconds = 0.0;  // filled by run_ubp

  int of(int v) const { return ub[static_cast<std::size_t>(v) - 1]; }
};

// Largest x such that at least x of the values are >= x; 0 for an empty
// list. Sorts a descending copy, then binary-searches the crossing point.
int h_index(std::vector<int> values);

UpperBounds initial_bounds(const BipartiteGraph& g);

// One refinement pass over the given side. Uses a dense |side|^2 counting
// table when |side| <= dense_limit, otherwise per-vertex sparse counters;
// both produce identical bounds.
UpperBounds common_neighbor_refine(const BipartiteGraph& g, UpperBounds bounds,
                                   Side side, int dense_limit = 4096);

UpperBounds propagate(const BipartiteGraph& g, UpperBounds bounds);

// Full pipeline: degree bounds, then one refinement per side whose
// cardinality is below `threshold`, then propagation to the fixed point.
UpperBounds run_ubp(const BipartiteGraph& g, int threshold = 30000);

}  // namespace mbbp
