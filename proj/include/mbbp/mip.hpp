// SPDX-License-Identifier: Apache-2.0
//
// 0/1 programming view of the problem. One binary x_i per vertex;
// build_original emits
//
//   maximize   sum of x_i over U
//   subject to x_u + x_v <= 1 for every non-edge (u, v)
//              sum over U of x_i - sum over V of x_i = 0
//
// whose feasible 0/1 points are exactly the balanced bicliques. The
// tightened variant appends one lifted inequality per low-bound seed
// vertex u: with l the side's largest per-vertex bound, S the side
// vertices whose bound is <= l-1 and T a greedy maximal subset of S
// containing u with pairwise disjoint neighborhoods,
//
//   sum over T of (l - ub_i + 1) x_i + sum over side\T of x_i <= l.
//
// LP output is deterministic text, byte for byte.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbbp/graph.hpp"
#include "mbbp/ubp.hpp"

namespace mbbp {

enum class Sense { LessEqual, Equal };

struct Constraint {
  std::string name;
  std::vector<std::pair<int, int>> terms;  // (variable index, coefficient)
  Sense sense = Sense::LessEqual;
  int rhs = 0;
};

// Variable i (1-based, = global vertex id) is named x<i>.
struct MipModel {
  int var_count = 0;
  std::vector<std::pair<int, int>> objective;  // maximized
  std::vector<Constraint> constraints;
  int ell_u = 0;  // tightening levels; 0 when absent for that side
  int ell_v = 0;
};

std::string variable_name(int index);

MipModel build_original(const BipartiteGraph& g);

// Side vertices whose bound is <= level, ascending.
std::vector<int> compute_S(const BipartiteGraph& g, const UpperBounds& bounds,
                           Side side, int level);

// Greedy maximal subset of s that contains u and has pairwise disjoint
// neighborhoods: start from {u}, scan s ascending, admit a vertex iff its
// neighborhood meets no member's. s must be sorted; u must be in s
// (InvalidSeed otherwise).
std::vector<int> build_T_set(const BipartiteGraph& g,
                             const std::vector<int>& s, int u);

// All lifted inequalities for both sides, exact duplicates removed,
// ordered by side then seed vertex. Constraint names are left empty; they
// are assigned on model assembly.
std::vector<Constraint> tightened_inequalities(const BipartiteGraph& g,
                                               const UpperBounds& bounds);

// Original model plus the tightened rows, constraints named c1..cK in
// model order (conflicts, balance, tightened).
MipModel with_tightening(const BipartiteGraph& g, const UpperBounds& bounds);

// True iff the indicator vector of every balanced biclique of g satisfies
// every constraint of the model. Exhaustive; the enumerated side is
// subject to the oracle budget (BudgetExceeded).
bool check_inequalities(const BipartiteGraph& g, const MipModel& model);

void write_lp(const MipModel& model, std::ostream& out);
std::string to_lp_string(const MipModel& model);
void write_lp_file(const MipModel& model, const std::string& path);

// Hands the model to an external LP solver: writes a temporary .lp file,
// substitutes its path for every "{}" in the command, runs it through the
// shell, and reads a line "objective: <decimal>" from its stdout. An empty
// command means no solver is configured and yields nullopt; a configured
// command that fails or prints no objective line raises IoError.
std::optional<double> lp_relaxation(const MipModel& model,
                                    const std::string& command_template);

}  // namespace mbbp
