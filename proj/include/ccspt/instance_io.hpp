// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Line-oriented instance and solution files.
//
//   p ccg <n> <m> <q>                 header, first non-comment line
//   c scale <k>                       decimal weights are multiplied by k
//   c undirected                      each edge line yields both directions
//   c source <v> / c target <v>       optional defaults for the CLI
//   c alpha <a1,a2,...>               optional default budgets
//   n <id> <name>                     names usable wherever a vertex goes
//   a <tail> <head> <color> <weight>  m edge lines
//
// The vertex-colored variant uses `p vcg <n> <m> <q>`, one `v <vertex>
// <color>` line per vertex and `a <tail> <head> <weight>` edge lines.
// `#` starts a comment; other `c` lines are comments too.

#ifndef CCSPT_INSTANCE_IO_HPP_
#define CCSPT_INSTANCE_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccspt/arborescence.hpp"
#include "ccspt/cc_sp.hpp"
#include "ccspt/graph.hpp"

namespace ccspt {

struct VertexNames {
  std::vector<std::string> name_of;  // empty, or one entry per vertex

  // Name when declared, else the decimal id.
  std::string label(VertexId v) const;
  // Declared name or decimal id; throws kBadVertexId.
  VertexId resolve(std::string_view token, int vertex_count) const;
};

struct InstanceDefaults {
  std::optional<VertexId> source;
  std::optional<VertexId> target;
  std::optional<ColorConstraint> alpha;
};

struct InstanceFile {
  ColoredDigraph graph;
  VertexNames names;
  InstanceDefaults defaults;
  std::int64_t scale = 1;
  bool undirected = false;
};

struct VccInstanceFile {
  VertexColoredDigraph graph;
  VertexNames names;
  InstanceDefaults defaults;
  std::int64_t scale = 1;
};

// Throws kParseError (with Error::line set) and kPrecisionError; the graph
// is checked with require_valid.
InstanceFile parse_instance(std::string_view text);
VccInstanceFile parse_vcc_instance(std::string_view text);

// "1,2,3" -> budgets. Throws kParseError.
ColorConstraint parse_alpha(std::string_view text);
std::string format_alpha(const ColorConstraint& alpha);

// Exact decimal scaling: "1.5" with scale 10 -> 15; "1.25" with scale 10
// throws kPrecisionError.
Weight parse_scaled_weight(std::string_view token, std::int64_t scale);

std::string print_instance(const ColoredDigraph& g,
                           const InstanceDefaults& defaults = {});
std::string print_vcc_instance(const VertexColoredDigraph& g,
                               const InstanceDefaults& defaults = {});

// `t <vertex> <parent> <color> <weight>` per non-root vertex, then
// `s summary 1 <total_weight> <color_counts...>`.
std::string print_solution(const ColoredDigraph& g, const Arborescence& t,
                           const VertexNames& names);
// `c reason <text>` then `s summary 0`.
std::string print_infeasible(std::string_view reason);

// Reads `t` lines back. Each line is matched to the edge with that tail,
// head, color and weight of smallest original_index; unmatched lines map to
// kNoEdge so that a verifier reports them. Throws kParseError.
Arborescence parse_solution(std::string_view text, const ColoredDigraph& g,
                            VertexId root, const VertexNames& names);

std::string print_path(const ColoredDigraph& g, const Path& p,
                       const VertexNames& names);

}  // namespace ccspt

#endif  // CCSPT_INSTANCE_IO_HPP_
