// SPDX-License-Identifier: Apache-2.0
#include "mbbp/solvers.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <span>

#include "mbbp/errors.hpp"
#include "mbbp/oracle.hpp"

namespace mbbp {

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> deadline_from(
    std::optional<double> seconds) {
  if (!seconds) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(*seconds));
}

// Sorted-side vertex list in branching priority order.
std::vector<int> by_min_degree(const BipartiteGraph& g, int first, int last) {
  std::vector<int> out;
  out.reserve(last - first + 1);
  for (int v = first; v <= last; ++v) out.push_back(v);
  std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
    return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
  });
  return out;
}

struct SearchBase {
  const BipartiteGraph& g;
  const SearchHooks* hooks;
  std::optional<Clock::time_point> deadline;
  bool expired = false;
  std::uint64_t nodes = 0;
  int lb = 0;
  std::vector<int> best_a, best_b;
  std::vector<std::vector<int>> pool;

  explicit SearchBase(const BipartiteGraph& graph, const SearchHooks* h,
                      std::optional<Clock::time_point> dl)
      : g(graph), hooks(h), deadline(dl) {}

  // Counts the node, fires the hook, polls the clock every 1024 nodes.
  bool enter(int a_size, int b_size) {
    ++nodes;
    if (hooks && hooks->on_node) hooks->on_node(a_size, b_size);
    if ((nodes & 1023u) == 1 && deadline && Clock::now() >= *deadline)
      expired = true;
    return !expired;
  }

  void record(const std::vector<int>& a, const std::vector<int>& b) {
    best_a = a;
    best_b = b;
    std::sort(best_a.begin(), best_a.end());
    std::sort(best_b.begin(), best_b.end());
    if (hooks && hooks->on_incumbent) hooks->on_incumbent(best_a, best_b);
  }

  // Sized once before the search starts: growing the pool mid-recursion
  // would invalidate the buffer references held by outer frames.
  std::vector<int>& pool_at(std::size_t depth) {
    assert(depth < pool.size());
    return pool[depth];
  }
};

// Two-sided alternating search. `ext` is the part being extended from
// cand_ext; each branch swaps the roles for the child call.
struct BbSearch : SearchBase {
  const std::vector<int>* ub;  // null for the baseline variant

  BbSearch(const BipartiteGraph& graph, const std::vector<int>* bounds,
           const SearchHooks* h, std::optional<Clock::time_point> dl)
      : SearchBase(graph, h, dl), ub(bounds) {}

  void run(std::vector<int>& ext, std::vector<int>& oth,
           std::span<const int> cand_ext, std::span<const int> cand_oth,
           std::size_t depth) {
    if (!enter(static_cast<int>(ext.size()), static_cast<int>(oth.size())))
      return;
    if (static_cast<int>(ext.size()) > lb) {
      lb = static_cast<int>(ext.size());
      record(ext, oth);
    }
    while (!cand_ext.empty()) {
      if (static_cast<int>(ext.size() + cand_ext.size()) <= lb) return;
      int v = cand_ext.front();  // minimum (degree, id) by construction
      cand_ext = cand_ext.subspan(1);
      if (hooks && hooks->on_branch) hooks->on_branch(v);
      const auto& nb = g.neighbors(v);
      auto& filtered = pool_at(depth);
      filtered.clear();
      for (int x : cand_oth)
        if (std::binary_search(nb.begin(), nb.end(), x))
          filtered.push_back(x);
      // Cheapest admissible cap on the half-size reachable below v: the
      // extended part can still take all of cand_ext, the other part all
      // of its compatible candidates.
      int bound =
          std::min(static_cast<int>(ext.size() + 1 + cand_ext.size()),
                   static_cast<int>(oth.size() + filtered.size()));
      if (ub) bound = std::min(bound, (*ub)[v - 1]);
      if (bound > lb) {
        ext.push_back(v);
        run(oth, ext, std::span<const int>(filtered), cand_ext, depth + 1);
        ext.pop_back();
      }
      if (expired) return;
    }
  }
};

// Single-side search over subsets of U. Candidates live in one shared
// array sorted ascending by (bound, then id descending); every frame owns
// a prefix length and pops the maximum-bound candidate off the back.
struct UniSearch : SearchBase {
  const std::vector<int>& ub;
  std::vector<int> order;
  std::vector<int> a;

  UniSearch(const BipartiteGraph& graph, const std::vector<int>& bounds,
            const SearchHooks* h, std::optional<Clock::time_point> dl)
      : SearchBase(graph, h, dl), ub(bounds) {}

  void run(std::size_t ca_len, const std::vector<int>& b, std::size_t depth) {
    if (!enter(static_cast<int>(a.size()), static_cast<int>(b.size())))
      return;
    if (a.size() <= b.size() && static_cast<int>(a.size()) > lb) {
      lb = static_cast<int>(a.size());
      record(a, b);
    }
    if (a.size() >= b.size() || static_cast<int>(b.size()) <= lb) return;
    while (ca_len > 0) {
      if (static_cast<int>(a.size() + ca_len) <= lb) return;
      int v = order[--ca_len];
      if (hooks && hooks->on_branch) hooks->on_branch(v);
      // v carries the largest remaining bound, so nothing left can beat lb.
      if (ub[v - 1] <= lb) return;
      const auto& nb = g.neighbors(v);
      auto& nextb = pool_at(depth);
      nextb.clear();
      // b and N(v) are both id-sorted: linear merge, dropping candidates
      // whose own bound cannot reach beyond the incumbent.
      std::size_t i = 0, j = 0;
      while (i < b.size() && j < nb.size()) {
        if (b[i] < nb[j]) {
          ++i;
        } else if (b[i] > nb[j]) {
          ++j;
        } else {
          if (ub[b[i] - 1] > lb) nextb.push_back(b[i]);
          ++i;
          ++j;
        }
      }
      a.push_back(v);
      run(ca_len, nextb, depth + 1);
      a.pop_back();
      if (expired) return;
    }
  }
};

Biclique normalized(const BipartiteGraph& g, std::vector<int> a,
                    std::vector<int> b) {
  if (!a.empty() && a[0] > g.u_count()) std::swap(a, b);
  return make_balance(std::move(a), std::move(b));
}

SolveResult finish(const BipartiteGraph& g, SearchBase& s,
                   Clock::time_point t0) {
  SolveResult r;
  r.best = normalized(g, std::move(s.best_a), std::move(s.best_b));
  r.half_size = s.lb;
  r.stats.nodes = s.nodes;
  r.stats.lb = s.lb;
  r.stats.status = s.expired ? SolveStatus::TimeLimit : SolveStatus::Optimal;
  r.stats.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

}  // namespace

int branch_vertex_min_degree(const BipartiteGraph& g,
                             const std::vector<int>& candidates) {
  if (candidates.empty()) throw EmptyCandidates("no candidates to branch on");
  int best = candidates[0];
  for (int v : candidates) {
    if (std::pair(g.degree(v), v) < std::pair(g.degree(best), best)) best = v;
  }
  return best;
}

Biclique make_balance(std::vector<int> a, std::vector<int> b) {
  std::size_t k = std::min(a.size(), b.size());
  a.resize(k);
  b.resize(k);
  return Biclique{std::move(a), std::move(b)};
}

SolveResult solve_bbclq(const BipartiteGraph& g, const UpperBounds* bounds,
                        std::optional<double> time_limit_seconds,
                        const SearchHooks* hooks) {
  auto t0 = Clock::now();
  BbSearch s(g, bounds ? &bounds->ub : nullptr, hooks,
             deadline_from(time_limit_seconds));
  s.pool.resize(g.vertex_count() + 1);
  std::vector<int> cand_u = by_min_degree(g, 1, g.u_count());
  std::vector<int> cand_v =
      by_min_degree(g, g.u_count() + 1, g.vertex_count());
  std::vector<int> a, b;
  s.run(a, b, std::span<const int>(cand_u), std::span<const int>(cand_v), 0);
  return finish(g, s, t0);
}

SolveResult solve_ext_uni_bbclq(const BipartiteGraph& g,
                                const UpperBounds& bounds,
                                std::optional<double> time_limit_seconds,
                                const SearchHooks* hooks) {
  if (g.u_count() > g.v_count()) {
    // The scheme enumerates the first side; present the smaller one as U.
    // Bounds are per-vertex and label-independent, so they are carried
    // over by the same relabeling instead of being recomputed.
    BipartiteGraph flipped = swap_sides(g);
    UpperBounds fb;
    fb.ub.resize(bounds.ub.size());
    for (int j = 1; j <= g.v_count(); ++j)
      fb.ub[j - 1] = bounds.ub[g.u_count() + j - 1];
    for (int i = 1; i <= g.u_count(); ++i)
      fb.ub[g.v_count() + i - 1] = bounds.ub[i - 1];
    fb.iterations = bounds.iterations;
    SolveResult r =
        solve_ext_uni_bbclq(flipped, fb, time_limit_seconds, hooks);
    Biclique mapped;
    for (int x : r.best.side_b) mapped.side_a.push_back(x - g.v_count());
    for (int j : r.best.side_a) mapped.side_b.push_back(g.u_count() + j);
    r.best = std::move(mapped);
    return r;
  }

  auto t0 = Clock::now();
  UniSearch s(g, bounds.ub, hooks, deadline_from(time_limit_seconds));
  s.pool.resize(g.u_count() + 1);
  s.order.reserve(g.u_count());
  for (int v = 1; v <= g.u_count(); ++v) s.order.push_back(v);
  // Ascending by bound; among equal bounds the smallest id goes last so it
  // is branched on first.
  std::sort(s.order.begin(), s.order.end(), [&](int x, int y) {
    if (bounds.ub[x - 1] != bounds.ub[y - 1])
      return bounds.ub[x - 1] < bounds.ub[y - 1];
    return x > y;
  });
  std::vector<int> b;
  b.reserve(g.v_count());
  for (int v = g.u_count() + 1; v <= g.vertex_count(); ++v) b.push_back(v);
  s.run(s.order.size(), b, 0);
  return finish(g, s, t0);
}

Algo parse_algo(const std::string& tag) {
  if (tag == "bbclq") return Algo::Bbclq;
  if (tag == "extbbclq") return Algo::ExtBbclq;
  if (tag == "extunibbclq") return Algo::ExtUniBbclq;
  if (tag == "oracle") return Algo::Oracle;
  throw UnknownAlgorithm("unknown algorithm '" + tag + "'");
}

std::string algo_name(Algo a) {
  switch (a) {
    case Algo::Bbclq: return "bbclq";
    case Algo::ExtBbclq: return "extbbclq";
    case Algo::ExtUniBbclq: return "extunibbclq";
    case Algo::Oracle: return "oracle";
  }
  return "?";
}

SolveResult solve(const BipartiteGraph& g, Algo algo,
                  std::optional<double> time_limit_seconds,
                  int ubp_threshold) {
  auto t0 = Clock::now();
  auto remaining = [&]() -> std::optional<double> {
    if (!time_limit_seconds) return std::nullopt;
    double used = std::chrono::duration<double>(Clock::now() - t0).count();
    return std::max(0.0, *time_limit_seconds - used);
  };
  SolveResult r;
  switch (algo) {
    case Algo::Bbclq:
      r = solve_bbclq(g, nullptr, time_limit_seconds);
      break;
    case Algo::ExtBbclq: {
      UpperBounds b = run_ubp(g, ubp_threshold);
      r = solve_bbclq(g, &b, remaining());
      r.stats.ubp_iterations = b.iterations;
      r.stats.ubp_seconds = b.elapsed_seconds;
      break;
    }
    case Algo::ExtUniBbclq: {
      UpperBounds b = run_ubp(g, ubp_threshold);
      r = solve_ext_uni_bbclq(g, b, remaining());
      r.stats.ubp_iterations = b.iterations;
      r.stats.ubp_seconds = b.elapsed_seconds;
      break;
    }
    case Algo::Oracle: {
      OracleResult o = brute_force_max_balanced(g, time_limit_seconds);
      r.best = std::move(o.witness);
      r.half_size = o.half_size;
      r.stats.nodes = o.subsets;
      r.stats.lb = o.half_size;
      r.stats.status = o.hit_time_limit ? SolveStatus::TimeLimit
                                        : SolveStatus::Optimal;
      break;
    }
  }
  r.stats.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

SolveResult solve(const BipartiteGraph& g, const std::string& algo_tag,
                  std::optional<double> time_limit_seconds,
                  int ubp_threshold) {
  return solve(g, parse_algo(algo_tag), time_limit_seconds, ubp_threshold);
}

}  // namespace mbbp
