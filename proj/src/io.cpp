// SPDX-License-Identifier: Apache-2.0
#include "mbbp/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "mbbp/errors.hpp"

namespace mbbp {

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double splitmix64_unit(std::uint64_t& state) {
  // Top 53 bits give a uniform dyadic rational in [0, 1).
  return static_cast<double>(splitmix64_next(state) >> 11) * 0x1.0p-53;
}

BipartiteGraph gen_random(const RandomSpec& spec) {
  if (spec.n < 0) throw InvalidVertex("negative side cardinality");
  if (spec.p < 0.0 || spec.p > 1.0)
    throw IoError("edge probability must lie in [0, 1]");
  std::uint64_t state = spec.seed;
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= spec.n; ++u) {
    for (int v = spec.n + 1; v <= 2 * spec.n; ++v) {
      if (splitmix64_unit(state) < spec.p) edges.emplace_back(u, v);
    }
  }
  return BipartiteGraph::build(spec.n, spec.n, edges);
}

namespace {

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

bool parse_int(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == tok.size();
}

// Reads one line, tolerating CRLF input.
bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

BipartiteGraph parse_konect(std::istream& in) {
  std::vector<std::pair<int, int>> raw;
  int max_u = 0, max_v = 0;
  std::string line;
  int line_no = 0;
  while (next_line(in, line)) {
    ++line_no;
    auto toks = tokens_of(line);
    if (toks.empty() || toks[0][0] == '%') continue;
    if (toks.size() < 2) throw ParseError("expected two ids", line_no);
    long long u = 0, v = 0;
    if (!parse_int(toks[0], u) || u <= 0)
      throw ParseError("bad U id '" + toks[0] + "'", line_no);
    if (!parse_int(toks[1], v) || v <= 0)
      throw ParseError("bad V id '" + toks[1] + "'", line_no);
    raw.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_u = std::max(max_u, static_cast<int>(u));
    max_v = std::max(max_v, static_cast<int>(v));
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  for (auto& [u, v] : raw) v += max_u;  // V ids live after U ids globally
  return BipartiteGraph::build(max_u, max_v, raw);
}

BipartiteGraph read_native(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long u_count = 0, v_count = 0, edge_count = 0;
  std::vector<std::pair<int, int>> edges;
  while (next_line(in, line)) {
    ++line_no;
    auto toks = tokens_of(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (have_header) throw ParseError("duplicate header", line_no);
      if (toks.size() != 5 || toks[1] != "mbbp")
        throw ParseError("malformed header", line_no);
      if (!parse_int(toks[2], u_count) || u_count < 0 ||
          !parse_int(toks[3], v_count) || v_count < 0 ||
          !parse_int(toks[4], edge_count) || edge_count < 0)
        throw ParseError("malformed header", line_no);
      have_header = true;
      continue;
    }
    if (toks[0] == "e") {
      if (!have_header) throw ParseError("edge before header", line_no);
      long long u = 0, v = 0;
      if (toks.size() != 3 || !parse_int(toks[1], u) || !parse_int(toks[2], v))
        throw ParseError("malformed edge", line_no);
      if (u < 1 || u > u_count || v <= u_count || v > u_count + v_count)
        throw ParseError("edge id out of range", line_no);
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      continue;
    }
    throw ParseError("unrecognized line '" + toks[0] + "'", line_no);
  }
  if (!have_header) throw ParseError("missing header", line_no == 0 ? 1 : line_no);
  if (static_cast<long long>(edges.size()) != edge_count)
    throw ParseError("header announces " + std::to_string(edge_count) +
                         " edges, file carries " + std::to_string(edges.size()),
                     line_no == 0 ? 1 : line_no);
  try {
    return BipartiteGraph::build(static_cast<int>(u_count),
                                 static_cast<int>(v_count), edges);
  } catch (const DuplicateEdge& e) {
    throw ParseError(e.what(), line_no);
  }
}

void write_native(const BipartiteGraph& g, std::ostream& out) {
  out << "p mbbp " << g.u_count() << ' ' << g.v_count() << ' '
      << g.edge_count() << '\n';
  for (int u = 1; u <= g.u_count(); ++u)
    for (int v : g.neighbors(u)) out << "e " << u << ' ' << v << '\n';
}

BipartiteGraph read_native_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_native(in);
}

void write_native_file(const BipartiteGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_native(g, out);
  if (!out.flush()) throw IoError("write to '" + path + "' failed");
}

}  // namespace mbbp
