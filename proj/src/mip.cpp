// SPDX-License-Identifier: Apache-2.0
#include "mbbp/mip.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>

#include "mbbp/errors.hpp"
#include "mbbp/oracle.hpp"

namespace mbbp {

std::string variable_name(int index) { return "x" + std::to_string(index); }

MipModel build_original(const BipartiteGraph& g) {
  MipModel m;
  m.var_count = g.vertex_count();
  for (int u = 1; u <= g.u_count(); ++u) m.objective.emplace_back(u, 1);
  int next = 1;
  for (const auto& [u, v] : g.non_edges()) {
    Constraint c;
    c.name = "c" + std::to_string(next++);
    c.terms = {{u, 1}, {v, 1}};
    c.sense = Sense::LessEqual;
    c.rhs = 1;
    m.constraints.push_back(std::move(c));
  }
  if (m.var_count > 0) {
    Constraint balance;
    balance.name = "c" + std::to_string(next++);
    for (int u = 1; u <= g.u_count(); ++u) balance.terms.emplace_back(u, 1);
    for (int v = g.u_count() + 1; v <= g.vertex_count(); ++v)
      balance.terms.emplace_back(v, -1);
    balance.sense = Sense::Equal;
    balance.rhs = 0;
    m.constraints.push_back(std::move(balance));
  }
  return m;
}

namespace {

std::pair<int, int> side_range(const BipartiteGraph& g, Side side) {
  return side == Side::U
             ? std::pair{1, g.u_count()}
             : std::pair{g.u_count() + 1, g.u_count() + g.v_count()};
}

bool neighborhoods_disjoint(const BipartiteGraph& g, int a, int b) {
  const auto& na = g.neighbors(a);
  const auto& nb = g.neighbors(b);
  std::size_t i = 0, j = 0;
  while (i < na.size() && j < nb.size()) {
    if (na[i] < nb[j]) {
      ++i;
    } else if (na[i] > nb[j]) {
      ++j;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<int> compute_S(const BipartiteGraph& g, const UpperBounds& bounds,
                           Side side, int level) {
  auto [first, last] = side_range(g, side);
  std::vector<int> out;
  for (int v = first; v <= last; ++v)
    if (bounds.ub[v - 1] <= level) out.push_back(v);
  return out;
}

std::vector<int> build_T_set(const BipartiteGraph& g,
                             const std::vector<int>& s, int u) {
  if (!std::binary_search(s.begin(), s.end(), u))
    throw InvalidSeed("seed vertex " + std::to_string(u) +
                      " is not in the base set");
  std::vector<int> t = {u};
  for (int w : s) {
    if (w == u) continue;
    bool ok = true;
    for (int member : t) {
      if (!neighborhoods_disjoint(g, w, member)) {
        ok = false;
        break;
      }
    }
    if (ok) t.push_back(w);
  }
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<Constraint> tightened_inequalities(const BipartiteGraph& g,
                                               const UpperBounds& bounds) {
  std::vector<Constraint> out;
  std::set<std::pair<std::vector<std::pair<int, int>>, int>> seen;
  for (Side side : {Side::U, Side::V}) {
    auto [first, last] = side_range(g, side);
    int ell = 0;
    for (int v = first; v <= last; ++v) ell = std::max(ell, bounds.ub[v - 1]);
    if (ell == 0) continue;  // edgeless side, nothing to lift
    std::vector<int> s = compute_S(g, bounds, side, ell - 1);
    for (int u : s) {
      std::vector<int> t = build_T_set(g, s, u);
      Constraint c;
      for (int v = first; v <= last; ++v) {
        bool in_t = std::binary_search(t.begin(), t.end(), v);
        c.terms.emplace_back(v, in_t ? ell - bounds.ub[v - 1] + 1 : 1);
      }
      c.sense = Sense::LessEqual;
      c.rhs = ell;
      if (seen.emplace(c.terms, c.rhs).second) out.push_back(std::move(c));
    }
  }
  return out;
}

MipModel with_tightening(const BipartiteGraph& g, const UpperBounds& bounds) {
  MipModel m = build_original(g);
  int next = static_cast<int>(m.constraints.size()) + 1;
  for (Constraint& c : tightened_inequalities(g, bounds)) {
    c.name = "c" + std::to_string(next++);
    m.constraints.push_back(std::move(c));
  }
  auto [uf, ul] = side_range(g, Side::U);
  for (int v = uf; v <= ul; ++v) m.ell_u = std::max(m.ell_u, bounds.ub[v - 1]);
  auto [vf, vl] = side_range(g, Side::V);
  for (int v = vf; v <= vl; ++v) m.ell_v = std::max(m.ell_v, bounds.ub[v - 1]);
  return m;
}

namespace {

// Walks every balanced biclique: subsets A of the smaller side by
// include/exclude recursion, then all |A|-subsets of A's common
// neighborhood. Returns false as soon as some constraint is violated.
struct BicliqueChecker {
  const BipartiteGraph& g;
  std::vector<std::vector<int>> coeff;  // dense per constraint
  const std::vector<Constraint>& constraints;

  bool violated(const std::vector<int>& a, const std::vector<int>& b) const {
    for (std::size_t k = 0; k < constraints.size(); ++k) {
      long long lhs = 0;
      for (int x : a) lhs += coeff[k][x - 1];
      for (int x : b) lhs += coeff[k][x - 1];
      if (constraints[k].sense == Sense::LessEqual) {
        if (lhs > constraints[k].rhs) return true;
      } else {
        if (lhs != constraints[k].rhs) return true;
      }
    }
    return false;
  }

  std::vector<int> chosen_b;
  const std::vector<int>* current_a = nullptr;

  // All size-k subsets of pool[i..).
  bool combos(const std::vector<int>& pool, std::size_t i, std::size_t k) {
    if (k == 0) return !violated(*current_a, chosen_b);
    if (pool.size() - i < k) return true;
    chosen_b.push_back(pool[i]);
    bool ok = combos(pool, i + 1, k - 1);
    chosen_b.pop_back();
    if (!ok) return false;
    return combos(pool, i + 1, k);
  }
};

}  // namespace

bool check_inequalities(const BipartiteGraph& g, const MipModel& model) {
  Side small = g.u_count() <= g.v_count() ? Side::U : Side::V;
  int small_size = small == Side::U ? g.u_count() : g.v_count();
  if (small_size > kOracleSideBudget)
    throw BudgetExceeded("graph too large for exhaustive biclique check");

  BicliqueChecker chk{g, {}, model.constraints, {}, nullptr};
  chk.coeff.assign(model.constraints.size(),
                   std::vector<int>(model.var_count, 0));
  for (std::size_t k = 0; k < model.constraints.size(); ++k)
    for (const auto& [var, c] : model.constraints[k].terms)
      chk.coeff[k][var - 1] = c;

  auto [first, last] = side_range(g, small);
  auto [ofirst, olast] = side_range(g, small == Side::U ? Side::V : Side::U);
  std::vector<int> opposite;
  for (int v = ofirst; v <= olast; ++v) opposite.push_back(v);

  std::vector<int> a;
  std::vector<std::vector<int>> inter(last - first + 2);
  inter[0] = opposite;
  // DFS over subsets of the small side; at each leaf enumerate the B parts.
  std::function<bool(int, std::size_t)> rec = [&](int v,
                                                  std::size_t depth) -> bool {
    if (v > last) {
      chk.current_a = &a;
      return chk.combos(inter[depth], 0, a.size());
    }
    if (!rec(v + 1, depth)) return false;
    const auto& nb = g.neighbors(v);
    auto& next = inter[depth + 1];
    next.clear();
    std::set_intersection(inter[depth].begin(), inter[depth].end(), nb.begin(),
                          nb.end(), std::back_inserter(next));
    a.push_back(v);
    bool ok = rec(v + 1, depth + 1);
    a.pop_back();
    return ok;
  };
  return rec(first, 0);
}

namespace {

void append_terms(std::ostream& out,
                  const std::vector<std::pair<int, int>>& terms) {
  bool leading = true;
  for (const auto& [var, coeff] : terms) {
    if (coeff == 0) continue;
    if (leading) {
      out << ' ' << (coeff < 0 ? "- " : "");
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    int mag = std::abs(coeff);
    if (mag != 1) out << mag << ' ';
    out << variable_name(var);
    leading = false;
  }
}

}  // namespace

void write_lp(const MipModel& model, std::ostream& out) {
  out << "\\ mbbp model\n";
  out << "Maximize\n";
  out << "obj:";
  append_terms(out, model.objective);
  out << '\n';
  out << "Subject To\n";
  for (const Constraint& c : model.constraints) {
    out << c.name << ':';
    append_terms(out, c.terms);
    out << (c.sense == Sense::LessEqual ? " <= " : " = ") << c.rhs << '\n';
  }
  out << "Binaries\n";
  for (int i = 1; i <= model.var_count; ++i)
    out << (i == 1 ? "" : " ") << variable_name(i);
  if (model.var_count > 0) out << '\n';
  out << "End\n";
}

std::string to_lp_string(const MipModel& model) {
  std::ostringstream ss;
  write_lp(model, ss);
  return ss.str();
}

void write_lp_file(const MipModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_lp(model, out);
  if (!out.flush()) throw IoError("write to '" + path + "' failed");
}

std::optional<double> lp_relaxation(const MipModel& model,
                                    const std::string& command_template) {
  if (command_template.empty()) return std::nullopt;

  char path[] = "/tmp/mbbp_model_XXXXXX.lp";
  int fd = mkstemps(path, 3);
  if (fd < 0) throw IoError("cannot create temporary LP file");
  close(fd);
  try {
    write_lp_file(model, path);
    std::string cmd = command_template;
    const std::string placeholder = "{}";
    for (std::size_t pos = cmd.find(placeholder); pos != std::string::npos;
         pos = cmd.find(placeholder, pos)) {
      cmd.replace(pos, placeholder.size(), path);
      pos += std::string(path).size();
    }
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw IoError("cannot run LP solver command");
    std::string output;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
      output.append(buf, got);
    int rc = pclose(pipe);
    std::remove(path);
    if (rc != 0)
      throw IoError("LP solver command failed with status " +
                    std::to_string(rc));
    std::istringstream lines(output);
    std::string line;
    while (std::getline(lines, line)) {
      std::istringstream ls(line);
      std::string tag;
      double value;
      if (ls >> tag >> value && tag == "objective:") return value;
    }
    throw IoError("LP solver printed no 'objective:' line");
  } catch (...) {
    std::remove(path);
    throw;
  }
}

}  // namespace mbbp
