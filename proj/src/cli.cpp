// SPDX-License-Identifier: Apache-2.0
#include "mbbp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbbp/errors.hpp"
#include "mbbp/graph.hpp"
#include "mbbp/io.hpp"
#include "mbbp/mip.hpp"
#include "mbbp/oracle.hpp"
#include "mbbp/solvers.hpp"
#include "mbbp/ubp.hpp"

namespace mbbp {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitTimeLimit = 3;
constexpr int kExitVerifyFailed = 4;

std::int64_t to_ms(double seconds) {
  return static_cast<std::int64_t>(std::llround(seconds * 1000.0));
}

RunRecord record_of(const std::string& instance, const std::string& algo,
                    const SolveResult& r) {
  RunRecord rec;
  rec.instance = instance;
  rec.algo = algo;
  rec.half_size = r.half_size;
  rec.nodes = r.stats.nodes;
  rec.time_ms = to_ms(r.stats.elapsed_seconds);
  rec.status =
      r.stats.status == SolveStatus::Optimal ? "optimal" : "timeout";
  rec.ubp_iters = r.stats.ubp_iterations;
  rec.ubp_time_ms = to_ms(r.stats.ubp_seconds);
  return rec;
}

void print_human(const RunRecord& rec, const Biclique& best,
                 std::ostream& out) {
  out << "half_size: " << rec.half_size << '\n';
  out << "side_a:";
  for (int v : best.side_a) out << ' ' << v;
  out << '\n';
  out << "side_b:";
  for (int v : best.side_b) out << ' ' << v;
  out << '\n';
  out << "nodes: " << rec.nodes << '\n';
  out << "time_ms: " << rec.time_ms << '\n';
  out << "status: " << rec.status << '\n';
  out << "ubp_iters: " << rec.ubp_iters << '\n';
  out << "ubp_time_ms: " << rec.ubp_time_ms << '\n';
}

// Instance reference in a bench spec: a native file path or an inline
// "rand:<n>:<p>:<seed>" triple.
BipartiteGraph load_instance(const std::string& ref) {
  if (ref.rfind("rand:", 0) == 0) {
    std::istringstream ss(ref.substr(5));
    std::string n_s, p_s, seed_s;
    if (!std::getline(ss, n_s, ':') || !std::getline(ss, p_s, ':') ||
        !std::getline(ss, seed_s))
      throw ParseError("bad random instance spec '" + ref + "'", 0);
    RandomSpec spec;
    try {
      spec.n = std::stoi(n_s);
      spec.p = std::stod(p_s);
      spec.seed = std::stoull(seed_s);
    } catch (const std::exception&) {
      throw ParseError("bad random instance spec '" + ref + "'", 0);
    }
    return gen_random(spec);
  }
  return read_native_file(ref);
}

struct BenchRow {
  std::string instance;
  std::string algo;
  std::optional<double> time_limit;
};

std::vector<BenchRow> read_bench_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::vector<BenchRow> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::istringstream ss(line);
    std::string instance, algo, limit;
    if (!std::getline(ss, instance, ',') || !std::getline(ss, algo, ','))
      throw ParseError("expected 'instance,algo[,time_limit]'", line_no);
    BenchRow row;
    auto strip = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
      return s;
    };
    row.instance = strip(instance);
    row.algo = strip(algo);
    if (std::getline(ss, limit)) {
      limit = strip(limit);
      if (!limit.empty()) {
        try {
          row.time_limit = std::stod(limit);
        } catch (const std::exception&) {
          throw ParseError("bad time limit '" + limit + "'", line_no);
        }
      }
    }
    if (row.instance.empty() || row.algo.empty())
      throw ParseError("expected 'instance,algo[,time_limit]'", line_no);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> parse_id_line(const std::string& line, int line_no) {
  std::vector<int> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad vertex id '" + tok + "'", line_no);
    }
  }
  return out;
}

}  // namespace

std::string to_json_line(const RunRecord& r) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance;
  j["algo"] = r.algo;
  j["half_size"] = r.half_size;
  j["nodes"] = r.nodes;
  j["time_ms"] = r.time_ms;
  j["status"] = r.status;
  j["ubp_iters"] = r.ubp_iters;
  j["ubp_time_ms"] = r.ubp_time_ms;
  return j.dump();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact maximum balanced biclique toolkit"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "write a seeded random instance");
  int gen_n = 0;
  double gen_p = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--n", gen_n, "vertices per side")->required();
  gen->add_option("--p", gen_p, "edge probability in [0, 1]")->required();
  gen->add_option("--seed", gen_seed, "generator seed")->required();
  gen->add_option("--out", gen_out, "output file")->required();

  auto* ubp =
      app.add_subcommand("ubp", "print per-vertex upper bounds, one per line");
  std::string ubp_file;
  int ubp_threshold = 30000;
  ubp->add_option("file", ubp_file, "instance file")->required();
  ubp->add_option("--threshold", ubp_threshold,
                  "skip a side's refinement pass at this many vertices");

  auto* solve_cmd = app.add_subcommand("solve", "run one exact solver");
  std::string solve_file, solve_algo;
  double solve_limit = -1.0;
  bool solve_json = false;
  solve_cmd->add_option("file", solve_file, "instance file")->required();
  solve_cmd
      ->add_option("--algo", solve_algo,
                   "bbclq | extbbclq | extunibbclq | oracle")
      ->required();
  solve_cmd->add_option("--time-limit", solve_limit, "seconds");
  solve_cmd->add_flag("--json", solve_json, "emit one JSON run record");

  auto* mip_cmd = app.add_subcommand("mip", "emit the 0/1 model as LP text");
  std::string mip_file, mip_out;
  bool mip_tighten = false;
  mip_cmd->add_option("file", mip_file, "instance file")->required();
  mip_cmd->add_option("--out", mip_out, "LP output file")->required();
  mip_cmd->add_flag("--tighten", mip_tighten,
                    "append the lifted bound inequalities");

  auto* verify_cmd =
      app.add_subcommand("verify", "re-check a claimed solution file");
  std::string verify_file, verify_sol;
  verify_cmd->add_option("file", verify_file, "instance file")->required();
  verify_cmd
      ->add_option("--solution", verify_sol,
                   "two lines: the U-side ids, then the V-side ids")
      ->required();

  auto* bench_cmd = app.add_subcommand("bench", "run a batch of instances");
  std::string bench_spec;
  bool bench_json = false;
  bench_cmd
      ->add_option("--spec", bench_spec,
                   "CSV rows 'instance,algo[,time_limit]'")
      ->required();
  bench_cmd->add_flag("--json", bench_json, "one JSON record per line");

  std::vector<const char*> argv;
  argv.push_back("mbbp");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      if (gen_n < 1 || gen_p < 0.0 || gen_p > 1.0) {
        err << "gen: need n >= 1 and p in [0, 1]\n";
        return kExitUsage;
      }
      write_native_file(gen_random({gen_n, gen_p, gen_seed}), gen_out);
      return kExitOk;
    }

    if (ubp->parsed()) {
      BipartiteGraph g = read_native_file(ubp_file);
      UpperBounds b = run_ubp(g, ubp_threshold);
      for (int v = 1; v <= g.vertex_count(); ++v)
        out << v << ' ' << b.of(v) << '\n';
      return kExitOk;
    }

    if (solve_cmd->parsed()) {
      Algo algo = parse_algo(solve_algo);
      BipartiteGraph g = read_native_file(solve_file);
      std::optional<double> limit;
      if (solve_cmd->count("--time-limit")) limit = solve_limit;
      SolveResult r = solve(g, algo, limit);
      RunRecord rec = record_of(solve_file, solve_algo, r);
      if (solve_json) {
        out << to_json_line(rec) << '\n';
      } else {
        print_human(rec, r.best, out);
      }
      return r.stats.status == SolveStatus::TimeLimit ? kExitTimeLimit
                                                      : kExitOk;
    }

    if (mip_cmd->parsed()) {
      BipartiteGraph g = read_native_file(mip_file);
      MipModel m =
          mip_tighten ? with_tightening(g, run_ubp(g)) : build_original(g);
      write_lp_file(m, mip_out);
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      BipartiteGraph g = read_native_file(verify_file);
      std::ifstream sol(verify_sol);
      if (!sol) throw IoError("cannot open '" + verify_sol + "'");
      std::string line_a, line_b;
      std::getline(sol, line_a);
      std::getline(sol, line_b);
      Biclique claim{parse_id_line(line_a, 1), parse_id_line(line_b, 2)};
      std::sort(claim.side_a.begin(), claim.side_a.end());
      std::sort(claim.side_b.begin(), claim.side_b.end());
      bool valid = false;
      try {
        valid = g.verify_balanced_biclique(claim);
      } catch (const InvalidVertex& e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitVerifyFailed;
      }
      if (!valid) {
        err << "verification failed: not a balanced biclique\n";
        return kExitVerifyFailed;
      }
      int half = static_cast<int>(claim.side_a.size());
      if (std::min(g.u_count(), g.v_count()) <= kOracleSideBudget) {
        int opt = brute_force_max_balanced(g).half_size;
        if (half < opt) {
          err << "verification failed: balanced biclique of half size "
              << half << " is not optimal (optimum " << opt << ")\n";
          return kExitVerifyFailed;
        }
        out << "verified optimal: half size " << half << '\n';
      } else {
        out << "valid balanced biclique: half size " << half
            << " (instance too large for optimality check)\n";
      }
      return kExitOk;
    }

    if (bench_cmd->parsed()) {
      std::vector<BenchRow> rows = read_bench_spec(bench_spec);
      for (const BenchRow& row : rows) {
        Algo algo = parse_algo(row.algo);
        BipartiteGraph g = load_instance(row.instance);
        SolveResult r = solve(g, algo, row.time_limit);
        RunRecord rec = record_of(row.instance, row.algo, r);
        if (bench_json) {
          out << to_json_line(rec) << '\n';
        } else {
          out << rec.instance << ' ' << rec.algo
              << " half_size=" << rec.half_size << " nodes=" << rec.nodes
              << " time_ms=" << rec.time_ms << " status=" << rec.status
              << " ubp_iters=" << rec.ubp_iters
              << " ubp_time_ms=" << rec.ubp_time_ms << '\n';
        }
      }
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const UnknownAlgorithm& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mbbp
