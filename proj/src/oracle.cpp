// SPDX-License-Identifier: Apache-2.0
#include "mbbp/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "mbbp/errors.hpp"

namespace mbbp {

namespace {

using Clock = std::chrono::steady_clock;

struct Enumerator {
  const BipartiteGraph& g;
  std::vector<int> base;        // vertices still open for inclusion
  std::vector<int> chosen;      // current A
  std::vector<std::vector<int>> inter;  // inter[d] = common neighborhood
  std::uint64_t leaves = 0;
  int best = -1;
  std::vector<int> best_a, best_c;
  std::optional<Clock::time_point> deadline;
  bool expired = false;

  void consider(const std::vector<int>& common) {
    ++leaves;
    if ((leaves & 1023u) == 0 && deadline && Clock::now() >= *deadline)
      expired = true;
    int half = static_cast<int>(std::min(chosen.size(), common.size()));
    if (half > best) {
      best = half;
      best_a = chosen;
      best_c = common;
    }
  }

  // Include/exclude recursion over base[i..); `depth` owns inter[depth].
  void run(std::size_t i, std::size_t depth) {
    if (expired) return;
    if (i == base.size()) {
      consider(inter[depth]);
      return;
    }
    run(i + 1, depth);  // exclude base[i]
    if (expired) return;
    const auto& nb = g.neighbors(base[i]);
    auto& next = inter[depth + 1];
    next.clear();
    std::set_intersection(inter[depth].begin(), inter[depth].end(), nb.begin(),
                          nb.end(), std::back_inserter(next));
    chosen.push_back(base[i]);
    run(i + 1, depth + 1);
    chosen.pop_back();
  }
};

std::vector<int> side_ids(const BipartiteGraph& g, Side s) {
  std::vector<int> out;
  if (s == Side::U) {
    for (int v = 1; v <= g.u_count(); ++v) out.push_back(v);
  } else {
    for (int v = g.u_count() + 1; v <= g.vertex_count(); ++v) out.push_back(v);
  }
  return out;
}

void check_budget(int enumerated_side_size) {
  if (enumerated_side_size > kOracleSideBudget)
    throw BudgetExceeded("enumeration over " +
                         std::to_string(enumerated_side_size) +
                         " vertices exceeds the 2^" +
                         std::to_string(kOracleSideBudget) + " subset budget");
}

}  // namespace

OracleResult brute_force_max_balanced(
    const BipartiteGraph& g, std::optional<double> time_limit_seconds) {
  Side small = g.u_count() <= g.v_count() ? Side::U : Side::V;
  Side large = small == Side::U ? Side::V : Side::U;
  check_budget(small == Side::U ? g.u_count() : g.v_count());

  Enumerator e{g, side_ids(g, small), {}, {}, 0, -1, {}, {}, {}, false};
  e.inter.resize(e.base.size() + 1);
  e.inter[0] = side_ids(g, large);
  if (time_limit_seconds)
    e.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(
                                        *time_limit_seconds));
  e.run(0, 0);

  OracleResult r;
  r.half_size = std::max(e.best, 0);
  r.subsets = e.leaves;
  r.hit_time_limit = e.expired;
  std::vector<int> a(e.best_a.begin(), e.best_a.begin() + r.half_size);
  std::vector<int> c(e.best_c.begin(), e.best_c.begin() + r.half_size);
  if (small == Side::U) {
    r.witness = Biclique{std::move(a), std::move(c)};
  } else {
    r.witness = Biclique{std::move(c), std::move(a)};
  }
  return r;
}

OracleResult brute_force_max_balanced(const BipartiteGraph& g) {
  return brute_force_max_balanced(g, std::nullopt);
}

int vertex_bound(const BipartiteGraph& g, int v) {
  if (!g.valid_id(v))
    throw InvalidVertex("vertex id " + std::to_string(v) + " out of range");
  Side small = g.u_count() <= g.v_count() ? Side::U : Side::V;
  Side large = small == Side::U ? Side::V : Side::U;
  check_budget(small == Side::U ? g.u_count() : g.v_count());

  Enumerator e{g, {}, {}, {}, 0, -1, {}, {}, {}, false};
  if (g.side_of(v) == small) {
    // Enumerate the subsets of v's side that contain v.
    for (int x : side_ids(g, small))
      if (x != v) e.base.push_back(x);
    e.chosen.push_back(v);
    e.inter.resize(e.base.size() + 1);
    e.inter[0] = g.neighbors(v);
  } else {
    // v sits on the enumerated side's opposite: any containing biclique has
    // its small part inside N(v), which keeps v in the common neighborhood.
    if (g.degree(v) == 0) return 0;
    e.base = g.neighbors(v);
    e.inter.resize(e.base.size() + 1);
    e.inter[0] = side_ids(g, large);
  }
  e.run(0, 0);
  // Any positive leaf value min(|A|, |C|) is achieved by a biclique that
  // does contain v: shrink the oversized part around v if necessary.
  return std::max(e.best, 0);
}

}  // namespace mbbp
