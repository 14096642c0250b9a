// SPDX-License-Identifier: Apache-2.0
//
// Instance input/output: seeded random generator, KONECT edge lists, and
// the native text format.
//
// Native format, line oriented:
//   c <free text>            comment, allowed anywhere
//   p mbbp <|U|> <|V|> <|E|> header, exactly once, before any edge
//   e <u> <v>                one edge, global 1-based ids
// The writer emits edges sorted by (u, v), LF line endings, so a graph
// round-trips byte-identically.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "mbbp/graph.hpp"

namespace mbbp {

struct RandomSpec {
  int n = 0;          // vertices per side
  double p = 0.0;     // edge probability, in [0, 1]
  std::uint64_t seed = 0;
};

// The project-wide pseudo random generator is splitmix64 (public domain,
// Vigna 2015). It is part of the reproducibility contract: gen_random output
// for a given seed must never change. One call advances the state and
// returns 64 bits.
std::uint64_t splitmix64_next(std::uint64_t& state);

// Mapping of one splitmix64 output to a uniform double in [0, 1).
double splitmix64_unit(std::uint64_t& state);

// Random bipartite graph with n vertices per side. Iterates the n*n pairs
// in row-major order (u ascending, then v ascending) and draws once per
// pair; the edge is included iff the draw is < p. Deterministic in spec.
BipartiteGraph gen_random(const RandomSpec& spec);

// KONECT bipartite edge list: '%' comment lines and blank lines are
// skipped; each remaining line names one edge by a pair of positive
// integers (two separate 1-based id spaces), any further fields (weights,
// timestamps) are ignored. Duplicate pairs are merged. Side cardinalities
// are the maximum observed id per side.
BipartiteGraph parse_konect(std::istream& in);

BipartiteGraph read_native(std::istream& in);
void write_native(const BipartiteGraph& g, std::ostream& out);

// Convenience file wrappers; throw IoError when the file cannot be
// opened, ParseError on malformed content.
BipartiteGraph read_native_file(const std::string& path);
void write_native_file(const BipartiteGraph& g, const std::string& path);

}  // namespace mbbp
