// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fixtures.hpp"
#include "mbbp/errors.hpp"
#include "mbbp/graph.hpp"
#include "mbbp/io.hpp"
#include "mbbp/oracle.hpp"
#include "mbbp/solvers.hpp"
#include "mbbp/ubp.hpp"

using mbbp::Biclique;
using mbbp::BipartiteGraph;
using mbbp::SearchHooks;
using mbbp::SolveResult;
using mbbp::SolveStatus;

namespace {

// 50 varied instances: seed s in 1..50, density cycling 0.1..0.9.
std::vector<BipartiteGraph> solver_suite() {
  std::vector<BipartiteGraph> out;
  for (std::uint64_t s = 1; s <= 50; ++s) {
    double p = 0.1 * (1 + (s - 1) % 9);
    out.push_back(mbbp::gen_random({8, p, s}));
  }
  return out;
}

}  // namespace

TEST_SUITE("solvers") {
  TEST_CASE("branch vertex picks minimum degree, then smallest id") {
    auto g = fixtures::sample_graph();
    CHECK(mbbp::branch_vertex_min_degree(g, {1, 2, 3, 4, 5}) == 1);
    CHECK(mbbp::branch_vertex_min_degree(g, {2, 3}) == 2);
    CHECK(mbbp::branch_vertex_min_degree(g, {9}) == 9);
    CHECK(mbbp::branch_vertex_min_degree(g, {3, 5}) == 5);
    CHECK_THROWS_AS(mbbp::branch_vertex_min_degree(g, {}),
                    mbbp::EmptyCandidates);
  }

  TEST_CASE("make_balance trims the larger side's largest ids") {
    auto r = mbbp::make_balance({2, 3}, {7, 8, 9});
    CHECK(r.side_a == std::vector<int>{2, 3});
    CHECK(r.side_b == std::vector<int>{7, 8});
    auto e = mbbp::make_balance({}, {});
    CHECK(e.side_a.empty());
    CHECK(e.side_b.empty());
    auto same = mbbp::make_balance({1}, {6});
    CHECK(same.side_a == std::vector<int>{1});
    CHECK(same.side_b == std::vector<int>{6});
    auto flip = mbbp::make_balance({1, 2, 3}, {9});
    CHECK(flip.side_a == std::vector<int>{1});
  }

  TEST_CASE("baseline solves the sample graph, branching on vertex 1 first") {
    auto g = fixtures::sample_graph();
    int first_branch = 0;
    SearchHooks hooks;
    hooks.on_branch = [&](int v) {
      if (first_branch == 0) first_branch = v;
    };
    auto r = mbbp::solve_bbclq(g, nullptr, std::nullopt, &hooks);
    CHECK(r.half_size == 2);
    CHECK(g.verify_balanced_biclique(r.best));
    CHECK(r.stats.status == SolveStatus::Optimal);
    CHECK(r.stats.nodes >= 1);
    CHECK(first_branch == 1);
  }

  TEST_CASE("trivial graphs across all algorithms") {
    auto edgeless = BipartiteGraph::build(3, 3, {});
    auto k33 = fixtures::complete(3, 3);
    auto k11 = BipartiteGraph::build(1, 1, {{1, 2}});
    for (const char* algo : {"bbclq", "extbbclq", "extunibbclq", "oracle"}) {
      auto r0 = mbbp::solve(edgeless, algo, std::nullopt, 30000);
      CHECK(r0.half_size == 0);
      CHECK(r0.best.side_a.empty());
      auto r3 = mbbp::solve(k33, algo, std::nullopt, 30000);
      CHECK(r3.half_size == 3);
      CHECK(k33.verify_balanced_biclique(r3.best));
      auto r1 = mbbp::solve(k11, algo, std::nullopt, 30000);
      CHECK(r1.half_size == 1);
    }
  }

  TEST_CASE("all solvers match the oracle on the randomized suite") {
    for (const auto& g : solver_suite()) {
      int want = mbbp::brute_force_max_balanced(g).half_size;
      for (const char* algo : {"bbclq", "extbbclq", "extunibbclq"}) {
        auto r = mbbp::solve(g, algo, std::nullopt, 30000);
        REQUIRE(r.half_size == want);
        CHECK(static_cast<int>(r.best.side_a.size()) == want);
        CHECK(g.verify_balanced_biclique(r.best));
        CHECK(r.stats.status == SolveStatus::Optimal);
      }
    }
  }

  TEST_CASE("bound-augmented search never explores more nodes") {
    for (const auto& g : solver_suite()) {
      auto plain = mbbp::solve(g, "bbclq", std::nullopt, 30000);
      auto ext = mbbp::solve(g, "extbbclq", std::nullopt, 30000);
      CHECK(ext.stats.nodes <= plain.stats.nodes);
      CHECK(ext.half_size == plain.half_size);
    }
  }

  TEST_CASE("alternating search keeps the sides within one of each other") {
    auto g = mbbp::gen_random({8, 0.5, 11});
    SearchHooks hooks;
    bool ok = true;
    hooks.on_node = [&](int a_size, int b_size) {
      int d = b_size - a_size;  // b is the side extended by the caller
      if (d != 0 && d != 1) ok = false;
    };
    mbbp::solve_bbclq(g, nullptr, std::nullopt, &hooks);
    CHECK(ok);
    auto ub = mbbp::run_ubp(g);
    mbbp::solve_bbclq(g, &ub, std::nullopt, &hooks);
    CHECK(ok);
  }

  TEST_CASE("single-side search follows the documented selection order") {
    auto g = fixtures::sample_graph();
    auto ub = mbbp::run_ubp(g);
    std::vector<int> picks;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> incumbents;
    SearchHooks hooks;
    hooks.on_branch = [&](int v) { picks.push_back(v); };
    hooks.on_incumbent = [&](const std::vector<int>& a,
                             const std::vector<int>& b) {
      incumbents.emplace_back(a, b);
    };
    auto r = mbbp::solve_ext_uni_bbclq(g, ub, std::nullopt, &hooks);
    CHECK(r.half_size == 2);
    CHECK(g.verify_balanced_biclique(r.best));
    // Highest bound branches first; ties favor the smaller id. After the
    // {2,3} subtree proves lb = 2, every later pick cuts off immediately.
    CHECK(picks == std::vector<int>{2, 3, 1, 1, 3});
    CHECK(r.stats.nodes == 3);
    // Every incumbent's A-side must have enough common neighbors.
    for (const auto& [a, b] : incumbents) {
      REQUIRE(!a.empty());
      std::vector<int> common = g.neighbors(a[0]);
      for (std::size_t i = 1; i < a.size(); ++i) {
        std::vector<int> next;
        const auto& nb = g.neighbors(a[i]);
        std::set_intersection(common.begin(), common.end(), nb.begin(),
                              nb.end(), std::back_inserter(next));
        common.swap(next);
      }
      CHECK(common.size() >= a.size());
      // The recorded B-side is exactly a subset of those common neighbors.
      CHECK(std::includes(common.begin(), common.end(), b.begin(), b.end()));
    }
  }

  TEST_CASE("single-side search swaps a wide graph internally") {
    auto g = BipartiteGraph::build(
        6, 3,
        {{1, 7}, {1, 8}, {1, 9}, {2, 7}, {2, 9}, {3, 8}, {3, 9}, {4, 7},
         {5, 8}, {6, 9}});
    int want = mbbp::brute_force_max_balanced(g).half_size;
    auto r = mbbp::solve(g, "extunibbclq", std::nullopt, 30000);
    CHECK(r.half_size == want);
    CHECK(g.verify_balanced_biclique(r.best));
    for (int x : r.best.side_a) CHECK(x <= g.u_count());
    for (int x : r.best.side_b) CHECK(x > g.u_count());
  }

  TEST_CASE("zero time limit expires at the root but stays sound") {
    auto g = mbbp::gen_random({10, 0.6, 5});
    for (const char* algo : {"bbclq", "extbbclq", "extunibbclq", "oracle"}) {
      auto r = mbbp::solve(g, algo, 0.0, 30000);
      CHECK(r.stats.status == SolveStatus::TimeLimit);
      CHECK(r.half_size >= 0);
      CHECK(g.verify_balanced_biclique(r.best));
    }
  }

  TEST_CASE("dispatcher wires bounds and stats per algorithm") {
    auto g = fixtures::sample_graph();
    CHECK_THROWS_AS(mbbp::solve(g, "quantum", std::nullopt, 30000),
                    mbbp::UnknownAlgorithm);
    auto plain = mbbp::solve(g, "bbclq", std::nullopt, 30000);
    CHECK(plain.stats.ubp_iterations == 0);
    CHECK(plain.stats.ubp_seconds == 0.0);
    auto ora = mbbp::solve(g, "oracle", std::nullopt, 30000);
    CHECK(ora.stats.ubp_iterations == 0);
    CHECK(ora.half_size == 2);
    auto ext = mbbp::solve(g, "extbbclq", std::nullopt, 30000);
    CHECK(ext.stats.ubp_iterations == 1);
    auto uni = mbbp::solve(g, "extunibbclq", std::nullopt, 30000);
    CHECK(uni.stats.ubp_iterations == 1);
    // The dispatcher must agree with the manually staged pipeline.
    auto ub = mbbp::run_ubp(g);
    auto manual = mbbp::solve_ext_uni_bbclq(g, ub, std::nullopt);
    CHECK(uni.half_size == manual.half_size);
    CHECK(uni.stats.nodes == manual.stats.nodes);
  }

  TEST_CASE("repeated runs are bit-for-bit deterministic") {
    auto g = mbbp::gen_random({9, 0.5, 17});
    for (const char* algo : {"bbclq", "extbbclq", "extunibbclq"}) {
      auto a = mbbp::solve(g, algo, std::nullopt, 30000);
      auto b = mbbp::solve(g, algo, std::nullopt, 30000);
      CHECK(a.half_size == b.half_size);
      CHECK(a.stats.nodes == b.stats.nodes);
      CHECK(a.best.side_a == b.best.side_a);
      CHECK(a.best.side_b == b.best.side_b);
    }
  }

  TEST_CASE("algo tags round-trip") {
    using mbbp::Algo;
    CHECK(mbbp::parse_algo("bbclq") == Algo::Bbclq);
    CHECK(mbbp::parse_algo("extbbclq") == Algo::ExtBbclq);
    CHECK(mbbp::parse_algo("extunibbclq") == Algo::ExtUniBbclq);
    CHECK(mbbp::parse_algo("oracle") == Algo::Oracle);
    CHECK(mbbp::algo_name(Algo::ExtUniBbclq) == "extunibbclq");
    CHECK_THROWS_AS(mbbp::parse_algo(""), mbbp::UnknownAlgorithm);
  }
}
