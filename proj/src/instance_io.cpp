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

#include "ccspt/instance_io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "ccspt/error.hpp"

namespace ccspt {

namespace {

struct Line {
  std::int64_t number = 0;  // 1-based
  std::vector<std::string_view> tokens;
};

[[noreturn]] void fail(std::int64_t line, const std::string& what) {
  Error e(ErrorKind::kParseError, "line " + std::to_string(line) + ": " + what);
  e.line = line;
  throw e;
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::int64_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::int64_t int_token(const Line& l, std::size_t i, std::string_view what) {
  const auto v = to_int(l.tokens[i]);
  if (!v) fail(l.number, "bad " + std::string(what) + " '" +
                             std::string(l.tokens[i]) + "'");
  return *v;
}

// Header fields shared by both formats.
struct Header {
  std::int64_t n = 0, m = 0, q = 0;
  std::int64_t scale = 1;
  bool undirected = false;
  std::size_t line_index = 0;  // position of the `p` line
  VertexNames names;
  // Deferred until names are known.
  std::optional<std::pair<std::int64_t, std::string_view>> source, target;
  std::optional<std::pair<std::int64_t, std::string_view>> alpha;
};

Header read_header(const std::vector<Line>& lines, std::string_view kind) {
  if (lines.empty()) fail(1, "empty input");
  // `c` lines may precede the header.
  std::size_t header = 0;
  while (header + 1 < lines.size() && lines[header].tokens[0] == "c") ++header;
  const Line& h = lines[header];
  if (h.tokens[0] != "p" || h.tokens.size() != 5 || h.tokens[1] != kind) {
    fail(h.number, "expected 'p " + std::string(kind) + " <n> <m> <q>'");
  }
  Header hd;
  hd.line_index = header;
  hd.n = int_token(h, 2, "vertex count");
  hd.m = int_token(h, 3, "edge count");
  hd.q = int_token(h, 4, "color count");
  if (hd.n < 0 || hd.m < 0 || hd.q < 0 ||
      hd.n > std::numeric_limits<VertexId>::max() - 2 ||
      hd.m > std::numeric_limits<EdgeId>::max() / 2) {
    fail(h.number, "header counts out of range");
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i == header) continue;
    const Line& l = lines[i];
    const auto& t = l.tokens;
    if (t[0] == "p") fail(l.number, "second header line");
    if (t[0] == "c" && t.size() >= 2) {
      if (t[1] == "scale") {
        if (t.size() != 3) fail(l.number, "expected 'c scale <k>'");
        hd.scale = int_token(l, 2, "scale");
        if (hd.scale < 1) fail(l.number, "scale must be a positive integer");
      } else if (t[1] == "undirected") {
        hd.undirected = true;
      } else if (t[1] == "source" && t.size() == 3) {
        hd.source.emplace(l.number, t[2]);
      } else if (t[1] == "target" && t.size() == 3) {
        hd.target.emplace(l.number, t[2]);
      } else if (t[1] == "alpha" && t.size() == 3) {
        hd.alpha.emplace(l.number, t[2]);
      }
    } else if (t[0] == "n") {
      if (t.size() != 3) fail(l.number, "expected 'n <id> <name>'");
      const std::int64_t id = int_token(l, 1, "vertex id");
      if (id < 0 || id >= hd.n) fail(l.number, "named vertex out of range");
      if (hd.names.name_of.empty()) hd.names.name_of.resize(hd.n);
      hd.names.name_of[id] = std::string(t[2]);
    }
  }
  return hd;
}

VertexId vertex_token(const Header& hd, std::int64_t line,
                      std::string_view token) {
  try {
    return hd.names.resolve(token, static_cast<int>(hd.n));
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

InstanceDefaults read_defaults(const Header& hd) {
  InstanceDefaults d;
  if (hd.source) d.source = vertex_token(hd, hd.source->first, hd.source->second);
  if (hd.target) d.target = vertex_token(hd, hd.target->first, hd.target->second);
  if (hd.alpha) {
    try {
      d.alpha = parse_alpha(hd.alpha->second);
    } catch (const Error& e) {
      fail(hd.alpha->first, e.what());
    }
  }
  return d;
}

void check_edge_count(const Header& hd, std::int64_t seen,
                      const std::vector<Line>& lines) {
  if (seen != hd.m) {
    fail(lines.back().number, "header declares " + std::to_string(hd.m) +
                                  " edges, found " + std::to_string(seen));
  }
}

Weight weight_token(const Header& hd, const Line& l, std::size_t i) {
  try {
    return parse_scaled_weight(l.tokens[i], hd.scale);
  } catch (Error& e) {
    e.line = l.number;
    throw;
  }
}

}  // namespace

std::string VertexNames::label(VertexId v) const {
  if (v >= 0 && static_cast<std::size_t>(v) < name_of.size() &&
      !name_of[v].empty()) {
    return name_of[v];
  }
  return std::to_string(v);
}

VertexId VertexNames::resolve(std::string_view token, int vertex_count) const {
  for (std::size_t i = 0; i < name_of.size(); ++i) {
    if (name_of[i] == token) return static_cast<VertexId>(i);
  }
  const auto v = to_int(token);
  if (!v || *v < 0 || *v >= vertex_count) {
    throw Error(ErrorKind::kBadVertexId,
                "unknown vertex '" + std::string(token) + "'");
  }
  return static_cast<VertexId>(*v);
}

ColorConstraint parse_alpha(std::string_view text) {
  std::vector<std::int64_t> a;
  if (text.empty()) return ColorConstraint(std::move(a));
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece = text.substr(
        start, comma == std::string_view::npos ? text.npos : comma - start);
    const auto v = to_int(piece);
    if (!v) {
      throw Error(ErrorKind::kParseError,
                  "bad budget '" + std::string(piece) + "' in alpha");
    }
    a.push_back(*v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ColorConstraint(std::move(a));
}

std::string format_alpha(const ColorConstraint& alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(alpha.values()[i]);
  }
  return s;
}

Weight parse_scaled_weight(std::string_view token, std::int64_t scale) {
  const std::string bad = "bad weight '" + std::string(token) + "'";
  std::string_view s = token;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  const std::size_t dot = s.find('.');
  const std::string_view whole = s.substr(0, dot);
  const std::string_view frac =
      dot == std::string_view::npos ? std::string_view() : s.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || frac.size() > 18) {
    throw Error(ErrorKind::kParseError, bad);
  }
  __int128 digits = 0;
  __int128 denom = 1;
  const __int128 limit = static_cast<__int128>(1) << 100;
  for (char c : whole) {
    if (c < '0' || c > '9') throw Error(ErrorKind::kParseError, bad);
    digits = digits * 10 + (c - '0');
    if (digits > limit) throw Error(ErrorKind::kParseError, bad);
  }
  for (char c : frac) {
    if (c < '0' || c > '9') throw Error(ErrorKind::kParseError, bad);
    digits = digits * 10 + (c - '0');
    denom *= 10;
    if (digits > limit) throw Error(ErrorKind::kParseError, bad);
  }
  const __int128 scaled = digits * scale;
  if (scaled % denom != 0) {
    throw Error(ErrorKind::kPrecisionError,
                "weight " + std::string(token) + " is not a multiple of 1/" +
                    std::to_string(scale));
  }
  __int128 value = scaled / denom;
  if (negative) value = -value;
  if (value > std::numeric_limits<Weight>::max() / 4 ||
      value < -(std::numeric_limits<Weight>::max() / 4)) {
    throw Error(ErrorKind::kParseError, "weight out of range: " + std::string(token));
  }
  return static_cast<Weight>(value);
}

InstanceFile parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  const Header hd = read_header(lines, "ccg");
  InstanceFile f;
  f.scale = hd.scale;
  f.undirected = hd.undirected;
  f.names = hd.names;
  std::vector<EdgeSpec> specs;
  std::int64_t seen = 0;
  for (std::size_t i = hd.line_index + 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] != "a") {
      if (l.tokens[0] != "c" && l.tokens[0] != "n") {
        fail(l.number, "unknown line type '" + std::string(l.tokens[0]) + "'");
      }
      continue;
    }
    if (l.tokens.size() != 5) {
      fail(l.number, "expected 'a <tail> <head> <color> <weight>'");
    }
    ++seen;
    const VertexId u = vertex_token(hd, l.number, l.tokens[1]);
    const VertexId v = vertex_token(hd, l.number, l.tokens[2]);
    const std::int64_t c = int_token(l, 3, "color");
    if (c < 1 || c > hd.q) fail(l.number, "color out of range");
    if (u == v) fail(l.number, "self-loop");
    const Weight w = weight_token(hd, l, 4);
    if (hd.undirected && w < 0) {
      fail(l.number,
           "negative weight in an undirected instance would create a "
           "negative cycle");
    }
    specs.push_back({u, v, static_cast<ColorId>(c), w});
    if (hd.undirected) specs.push_back({v, u, static_cast<ColorId>(c), w});
  }
  check_edge_count(hd, seen, lines);
  f.graph = make_graph(static_cast<int>(hd.n), static_cast<int>(hd.q), specs);
  require_valid(f.graph);
  f.defaults = read_defaults(hd);
  return f;
}

VccInstanceFile parse_vcc_instance(std::string_view text) {
  const auto lines = tokenize(text);
  const Header hd = read_header(lines, "vcg");
  VccInstanceFile f;
  f.scale = hd.scale;
  f.names = hd.names;
  f.graph.vertex_count = static_cast<int>(hd.n);
  f.graph.color_count = static_cast<int>(hd.q);
  f.graph.vertex_color.assign(hd.n, 0);
  std::int64_t seen = 0;
  for (std::size_t i = hd.line_index + 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto& t = l.tokens;
    if (t[0] == "v") {
      if (t.size() != 3) fail(l.number, "expected 'v <vertex> <color>'");
      const VertexId v = vertex_token(hd, l.number, t[1]);
      const std::int64_t c = int_token(l, 2, "color");
      if (c < 1 || c > hd.q) fail(l.number, "color out of range");
      f.graph.vertex_color[v] = static_cast<ColorId>(c);
    } else if (t[0] == "a") {
      if (t.size() != 4) fail(l.number, "expected 'a <tail> <head> <weight>'");
      ++seen;
      const VertexId u = vertex_token(hd, l.number, t[1]);
      const VertexId v = vertex_token(hd, l.number, t[2]);
      if (u == v) fail(l.number, "self-loop");
      const Weight w = weight_token(hd, l, 3);
      f.graph.edges.push_back({u, v, w});
      if (hd.undirected) {
        if (w < 0) fail(l.number, "negative weight in an undirected instance");
        f.graph.edges.push_back({v, u, w});
      }
    } else if (t[0] != "c" && t[0] != "n") {
      fail(l.number, "unknown line type '" + std::string(t[0]) + "'");
    }
  }
  check_edge_count(hd, seen, lines);
  for (VertexId v = 0; v < f.graph.vertex_count; ++v) {
    if (f.graph.vertex_color[v] == 0) {
      fail(lines.back().number, "vertex " + std::to_string(v) + " has no color");
    }
  }
  require_valid(f.graph);
  f.defaults = read_defaults(hd);
  return f;
}

namespace {

void print_defaults(std::ostringstream& os, const InstanceDefaults& d) {
  if (d.source) os << "c source " << *d.source << '\n';
  if (d.target) os << "c target " << *d.target << '\n';
  if (d.alpha) os << "c alpha " << format_alpha(*d.alpha) << '\n';
}

}  // namespace

std::string print_instance(const ColoredDigraph& g,
                           const InstanceDefaults& defaults) {
  std::ostringstream os;
  os << "p ccg " << g.vertex_count() << ' ' << g.edge_count() << ' '
     << g.color_count() << '\n';
  print_defaults(os, defaults);
  for (const EdgeRecord& e : g.edges()) {
    os << "a " << e.tail << ' ' << e.head << ' ' << e.color << ' '
       << e.weight << '\n';
  }
  return os.str();
}

std::string print_vcc_instance(const VertexColoredDigraph& g,
                               const InstanceDefaults& defaults) {
  std::ostringstream os;
  os << "p vcg " << g.vertex_count << ' ' << g.edges.size() << ' '
     << g.color_count << '\n';
  print_defaults(os, defaults);
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    os << "v " << v << ' ' << g.vertex_color[v] << '\n';
  }
  for (const VcEdge& e : g.edges) {
    os << "a " << e.tail << ' ' << e.head << ' ' << e.weight
       << '\n';
  }
  return os.str();
}

std::string print_solution(const ColoredDigraph& g, const Arborescence& t,
                           const VertexNames& names) {
  std::unordered_map<EdgeId, std::size_t> position;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    position.emplace(g.edge(i).original_index, i);
  }
  std::ostringstream os;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (t.parent_edge[v] == kNoEdge) continue;
    const EdgeRecord& e = g.edge(position.at(t.parent_edge[v]));
    os << "t " << names.label(v) << ' ' << names.label(e.tail) << ' '
       << e.color << ' ' << e.weight << '\n';
  }
  os << "s summary 1 " << t.total_weight;
  for (std::int64_t c : t.color_counts) os << ' ' << c;
  os << '\n';
  return os.str();
}

std::string print_infeasible(std::string_view reason) {
  return "c reason " + std::string(reason) + "\ns summary 0\n";
}

Arborescence parse_solution(std::string_view text, const ColoredDigraph& g,
                            VertexId root, const VertexNames& names) {
  const int n = g.vertex_count();
  Arborescence t;
  t.root = root;
  t.parent_edge.assign(n, kNoEdge);
  t.color_counts.assign(g.color_count(), 0);
  std::vector<bool> seen(n, false);
  for (const Line& l : tokenize(text)) {
    if (l.tokens[0] != "t") continue;
    if (l.tokens.size() != 5) {
      fail(l.number, "expected 't <vertex> <parent> <color> <weight>'");
    }
    VertexId v, u;
    try {
      v = names.resolve(l.tokens[1], n);
      u = names.resolve(l.tokens[2], n);
    } catch (const Error& e) {
      fail(l.number, e.what());
    }
    const std::int64_t c = int_token(l, 3, "color");
    const std::int64_t w = int_token(l, 4, "weight");
    if (seen[v]) fail(l.number, "second parent for vertex " + names.label(v));
    seen[v] = true;
    const EdgeRecord* best = nullptr;
    for (const EdgeRecord& e : g.edges()) {
      if (e.tail == u && e.head == v && e.color == c && e.weight == w &&
          (!best || e.original_index < best->original_index)) {
        best = &e;
      }
    }
    if (!best) continue;  // left as kNoEdge; the verifier reports it
    t.parent_edge[v] = best->original_index;
    t.color_counts[best->color - 1] += 1;
    t.total_weight += best->weight;
  }
  return t;
}

std::string print_path(const ColoredDigraph& g, const Path& p,
                       const VertexNames& names) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const EdgeRecord& e = g.edge(p.edges[i]);
    os << "e " << names.label(e.tail) << ' ' << names.label(e.head) << ' '
       << e.color << ' ' << e.weight << '\n';
  }
  return os.str();
}

}  // namespace ccspt
