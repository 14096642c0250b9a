// SPDX-License-Identifier: Apache-2.0
// Python bindings for the core operations.
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mbbp/errors.hpp"
#include "mbbp/graph.hpp"
#include "mbbp/io.hpp"
#include "mbbp/mip.hpp"
#include "mbbp/oracle.hpp"
#include "mbbp/solvers.hpp"
#include "mbbp/ubp.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_mbbp, m) {
  m.doc() = "exact maximum balanced biclique toolkit";

  py::register_exception<mbbp::InvalidVertex>(m, "InvalidVertexError");
  py::register_exception<mbbp::DuplicateEdge>(m, "DuplicateEdgeError");
  py::register_exception<mbbp::BudgetExceeded>(m, "BudgetExceededError");
  py::register_exception<mbbp::InvalidSeed>(m, "InvalidSeedError");
  py::register_exception<mbbp::UnknownAlgorithm>(m, "UnknownAlgorithmError");
  py::register_exception<mbbp::IoError>(m, "IoReadWriteError");
  py::register_exception<mbbp::ParseError>(m, "ParseFormatError");

  py::enum_<mbbp::Side>(m, "Side")
      .value("U", mbbp::Side::U)
      .value("V", mbbp::Side::V);

  py::class_<mbbp::Biclique>(m, "Biclique")
      .def(py::init([](std::vector<int> a, std::vector<int> b) {
             return mbbp::Biclique{std::move(a), std::move(b)};
           }),
           py::arg("side_a"), py::arg("side_b"))
      .def_readonly("side_a", &mbbp::Biclique::side_a)
      .def_readonly("side_b", &mbbp::Biclique::side_b)
      .def("__repr__", [](const mbbp::Biclique& c) {
        std::ostringstream ss;
        ss << "Biclique([";
        for (std::size_t i = 0; i < c.side_a.size(); ++i)
          ss << (i ? ", " : "") << c.side_a[i];
        ss << "], [";
        for (std::size_t i = 0; i < c.side_b.size(); ++i)
          ss << (i ? ", " : "") << c.side_b[i];
        ss << "])";
        return ss.str();
      });

  py::class_<mbbp::BipartiteGraph>(m, "BipartiteGraph")
      .def_static("build", &mbbp::BipartiteGraph::build, py::arg("u_count"),
                  py::arg("v_count"), py::arg("edges"),
                  "Build a graph from (u, v) edge pairs with global ids.")
      .def_property_readonly("u_count", &mbbp::BipartiteGraph::u_count)
      .def_property_readonly("v_count", &mbbp::BipartiteGraph::v_count)
      .def_property_readonly("edge_count", &mbbp::BipartiteGraph::edge_count)
      .def("degree", &mbbp::BipartiteGraph::degree, py::arg("v"))
      .def("neighbors", &mbbp::BipartiteGraph::neighbors, py::arg("v"))
      .def("has_edge", &mbbp::BipartiteGraph::has_edge, py::arg("u"),
           py::arg("v"))
      .def("side_of", &mbbp::BipartiteGraph::side_of, py::arg("v"))
      .def("non_edges", &mbbp::BipartiteGraph::non_edges)
      .def("verify_balanced_biclique",
           &mbbp::BipartiteGraph::verify_balanced_biclique, py::arg("c"));

  m.def("swap_sides", &mbbp::swap_sides, py::arg("g"));

  py::class_<mbbp::UpperBounds>(m, "UpperBounds")
      .def_readonly("ub", &mbbp::UpperBounds::ub)
      .def_readonly("iterations", &mbbp::UpperBounds::iterations)
      .def_readonly("elapsed_seconds", &mbbp::UpperBounds::elapsed_seconds)
      .def("of", &mbbp::UpperBounds::of, py::arg("v"));

  m.def("h_index", &mbbp::h_index, py::arg("values"));
  m.def("initial_bounds", &mbbp::initial_bounds, py::arg("g"));
  m.def("common_neighbor_refine", &mbbp::common_neighbor_refine, py::arg("g"),
        py::arg("bounds"), py::arg("side"), py::arg("dense_limit") = 4096);
  m.def("propagate", &mbbp::propagate, py::arg("g"), py::arg("bounds"));
  m.def("run_ubp", &mbbp::run_ubp, py::arg("g"), py::arg("threshold") = 30000);

  py::enum_<mbbp::SolveStatus>(m, "SolveStatus")
      .value("Optimal", mbbp::SolveStatus::Optimal)
      .value("TimeLimit", mbbp::SolveStatus::TimeLimit);

  py::class_<mbbp::SearchStats>(m, "SearchStats")
      .def_readonly("nodes", &mbbp::SearchStats::nodes)
      .def_readonly("elapsed_seconds", &mbbp::SearchStats::elapsed_seconds)
      .def_readonly("status", &mbbp::SearchStats::status)
      .def_readonly("lb", &mbbp::SearchStats::lb)
      .def_readonly("ubp_iterations", &mbbp::SearchStats::ubp_iterations)
      .def_readonly("ubp_seconds", &mbbp::SearchStats::ubp_seconds);

  py::class_<mbbp::SolveResult>(m, "SolveResult")
      .def_readonly("best", &mbbp::SolveResult::best)
      .def_readonly("half_size", &mbbp::SolveResult::half_size)
      .def_readonly("stats", &mbbp::SolveResult::stats);

  m.def("branch_vertex_min_degree", &mbbp::branch_vertex_min_degree,
        py::arg("g"), py::arg("candidates"));
  m.def("make_balance", &mbbp::make_balance, py::arg("a"), py::arg("b"));
  m.def(
      "solve_bbclq",
      [](const mbbp::BipartiteGraph& g, const mbbp::UpperBounds* bounds,
         std::optional<double> time_limit) {
        return mbbp::solve_bbclq(g, bounds, time_limit);
      },
      py::arg("g"), py::arg("bounds") = nullptr,
      py::arg("time_limit_seconds") = py::none());
  m.def(
      "solve_ext_uni_bbclq",
      [](const mbbp::BipartiteGraph& g, const mbbp::UpperBounds& bounds,
         std::optional<double> time_limit) {
        return mbbp::solve_ext_uni_bbclq(g, bounds, time_limit);
      },
      py::arg("g"), py::arg("bounds"),
      py::arg("time_limit_seconds") = py::none());
  m.def(
      "solve",
      [](const mbbp::BipartiteGraph& g, const std::string& algo,
         std::optional<double> time_limit, int ubp_threshold) {
        return mbbp::solve(g, algo, time_limit, ubp_threshold);
      },
      py::arg("g"), py::arg("algo"),
      py::arg("time_limit_seconds") = py::none(),
      py::arg("ubp_threshold") = 30000);

  py::class_<mbbp::OracleResult>(m, "OracleResult")
      .def_readonly("half_size", &mbbp::OracleResult::half_size)
      .def_readonly("witness", &mbbp::OracleResult::witness)
      .def_readonly("subsets", &mbbp::OracleResult::subsets);

  m.def("brute_force_max_balanced",
        py::overload_cast<const mbbp::BipartiteGraph&>(
            &mbbp::brute_force_max_balanced),
        py::arg("g"));
  m.def("vertex_bound", &mbbp::vertex_bound, py::arg("g"), py::arg("v"));

  py::enum_<mbbp::Sense>(m, "Sense")
      .value("LessEqual", mbbp::Sense::LessEqual)
      .value("Equal", mbbp::Sense::Equal);

  py::class_<mbbp::Constraint>(m, "Constraint")
      .def_readonly("name", &mbbp::Constraint::name)
      .def_readonly("terms", &mbbp::Constraint::terms)
      .def_readonly("sense", &mbbp::Constraint::sense)
      .def_readonly("rhs", &mbbp::Constraint::rhs);

  py::class_<mbbp::MipModel>(m, "MipModel")
      .def_readonly("var_count", &mbbp::MipModel::var_count)
      .def_readonly("objective", &mbbp::MipModel::objective)
      .def_readonly("constraints", &mbbp::MipModel::constraints)
      .def_readonly("ell_u", &mbbp::MipModel::ell_u)
      .def_readonly("ell_v", &mbbp::MipModel::ell_v)
      .def("to_lp", &mbbp::to_lp_string);

  m.def("variable_name", &mbbp::variable_name, py::arg("index"));
  m.def("build_original", &mbbp::build_original, py::arg("g"));
  m.def("compute_S", &mbbp::compute_S, py::arg("g"), py::arg("bounds"),
        py::arg("side"), py::arg("level"));
  m.def("build_T_set", &mbbp::build_T_set, py::arg("g"), py::arg("s"),
        py::arg("u"));
  m.def("tightened_inequalities", &mbbp::tightened_inequalities, py::arg("g"),
        py::arg("bounds"));
  m.def("with_tightening", &mbbp::with_tightening, py::arg("g"),
        py::arg("bounds"));
  m.def("check_inequalities", &mbbp::check_inequalities, py::arg("g"),
        py::arg("model"));
  m.def("write_lp_file", &mbbp::write_lp_file, py::arg("model"),
        py::arg("path"));
  m.def("lp_relaxation", &mbbp::lp_relaxation, py::arg("model"),
        py::arg("command_template"),
        "Run an external LP solver; returns None when no command is set.");

  m.def(
      "gen_random",
      [](int n, double p, std::uint64_t seed) {
        return mbbp::gen_random({n, p, seed});
      },
      py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def(
      "parse_konect",
      [](const std::string& text) {
        std::istringstream ss(text);
        return mbbp::parse_konect(ss);
      },
      py::arg("text"));
  m.def(
      "read_native",
      [](const std::string& text) {
        std::istringstream ss(text);
        return mbbp::read_native(ss);
      },
      py::arg("text"));
  m.def(
      "write_native",
      [](const mbbp::BipartiteGraph& g) {
        std::ostringstream ss;
        mbbp::write_native(g, ss);
        return ss.str();
      },
      py::arg("g"));
  m.def("read_native_file", &mbbp::read_native_file, py::arg("path"));
  m.def("write_native_file", &mbbp::write_native_file, py::arg("g"),
        py::arg("path"));

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
