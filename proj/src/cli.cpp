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

#include "ccspt/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "ccspt/arborescence.hpp"
#include "ccspt/cc_sp.hpp"
#include "ccspt/instance_io.hpp"
#include "ccspt/spt.hpp"
#include "ccspt/sssp.hpp"
#include "ccspt/testkit.hpp"
#include "json.hpp"

namespace ccspt::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string file;
  std::string solution;
  std::string source;
  std::string target;
  std::string alpha;
  std::string solver = "auto";
  std::string sssp = "auto";
  bool restrict_reachable = false;
  bool verify = false;
  bool json = false;
  bool solve = false;
  std::uint64_t seed = 1;
  int n = 8;
  int q = 2;
  double density = 0.4;
  std::int64_t wmin = 1;
  std::int64_t wmax = 1;
  int count = 1000;
  int threads = 0;
  std::string kind = "dag";
  std::string dump;
};

// What a command produced: line output, the machine summary, an exit code.
struct Report {
  int code = kExitOk;
  std::ostringstream text;
  json doc = json::object();
};

// File contents by path; stdin ("-") is read once and kept.
class Input {
 public:
  explicit Input(std::istream& in) : in_(in) {}

  const std::string& read(const std::string& path) {
    auto it = cache_.find(path);
    if (it != cache_.end()) return it->second;
    std::ostringstream ss;
    if (path == "-") {
      ss << in_.rdbuf();
    } else {
      std::ifstream f(path);
      if (!f) throw Error(ErrorKind::kParseError, "cannot read " + path);
      ss << f.rdbuf();
    }
    return cache_.emplace(path, ss.str()).first->second;
  }

 private:
  std::istream& in_;
  std::map<std::string, std::string> cache_;
};

SolverChoice solver_of(const std::string& s) {
  if (s == "auto") return SolverChoice::kAuto;
  if (s == "flow") return SolverChoice::kFlow;
  if (s == "match") return SolverChoice::kMatch;
  if (s == "rb") return SolverChoice::kRedBlue;
  throw Error(ErrorKind::kPrecondition, "unknown solver '" + s + "'");
}

SsspMode sssp_of(const std::string& s) {
  if (s == "auto") return SsspMode::kAuto;
  if (s == "bfs") return SsspMode::kBfs;
  if (s == "dijkstra") return SsspMode::kDijkstra;
  if (s == "bellman-ford") return SsspMode::kBellmanFord;
  throw Error(ErrorKind::kPrecondition, "unknown sssp mode '" + s + "'");
}

VertexId pick_vertex(const std::string& flag, const std::optional<VertexId>& fallback,
                     const VertexNames& names, int n, const char* what) {
  if (!flag.empty()) return names.resolve(flag, n);
  if (fallback) return *fallback;
  if (std::string(what) == "source" && n > 0) return 0;
  throw Error(ErrorKind::kPrecondition, std::string("missing --") + what);
}

ColorConstraint pick_alpha(const std::string& flag,
                           const std::optional<ColorConstraint>& fallback) {
  if (!flag.empty()) return parse_alpha(flag);
  if (fallback) return *fallback;
  throw Error(ErrorKind::kPrecondition, "missing --alpha");
}

json tree_json(const ColoredDigraph& g, const Arborescence& t,
               const VertexNames& names) {
  std::unordered_map<EdgeId, std::size_t> position;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    position.emplace(g.edge(i).original_index, i);
  }
  json edges = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (t.parent_edge[v] == kNoEdge) continue;
    const EdgeRecord& e = g.edge(position.at(t.parent_edge[v]));
    edges.push_back({{"vertex", names.label(v)},
                     {"parent", names.label(e.tail)},
                     {"color", e.color},
                     {"weight", e.weight},
                     {"edge", e.original_index}});
  }
  return {{"root", names.label(t.root)},
          {"total_weight", t.total_weight},
          {"color_counts", t.color_counts},
          {"edges", edges}};
}

void report_violations(Report& r, const std::vector<Violation>& v) {
  json list = json::array();
  for (const Violation& x : v) {
    r.text << "c violation " << violation_kind_name(x.kind) << ' ' << x.vertex
           << ' ' << x.detail << '\n';
    list.push_back({{"kind", violation_kind_name(x.kind)},
                    {"vertex", x.vertex},
                    {"detail", x.detail}});
  }
  r.doc["violations"] = list;
}

// The graph actually solved, with the way back to input ids.
struct Prepared {
  ColoredDigraph graph;
  VertexId source = 0;
  std::optional<Restriction> restriction;
};

Prepared prepare(const ColoredDigraph& g, VertexId source, bool restrict) {
  if (!restrict) return {g, source, std::nullopt};
  Restriction r = restrict_to(g, reachable_from(g, source));
  Prepared p{r.graph, r.new_of_old[source], std::nullopt};
  p.restriction = std::move(r);
  return p;
}

// Rewrites a tree over the restricted graph into input ids.
Arborescence lift(const Prepared& p, const ColoredDigraph& g,
                  const Arborescence& t) {
  if (!p.restriction) return t;
  const Restriction& r = *p.restriction;
  Arborescence out = t;
  out.root = r.old_of_new[t.root];
  out.parent_edge.assign(g.vertex_count(), kNoEdge);
  for (VertexId v = 0; v < static_cast<VertexId>(t.parent_edge.size()); ++v) {
    if (t.parent_edge[v] == kNoEdge) continue;
    out.parent_edge[r.old_of_new[v]] =
        g.edge(r.old_edge_of_new[t.parent_edge[v]]).original_index;
  }
  return out;
}

// Cycle witnesses refer to the solved graph; map them to input ids.
void lift_error(const Prepared& p, const ColoredDigraph& g, Error& e) {
  if (!p.restriction) return;
  const Restriction& r = *p.restriction;
  for (auto& v : e.cycle_vertices) v = r.old_of_new[v];
  for (auto& x : e.cycle_edges) x = g.edge(r.old_edge_of_new[x]).original_index;
  if (e.vertex >= 0) e.vertex = r.old_of_new[e.vertex];
}

void emit_tree(Report& r, const ColoredDigraph& g, const Arborescence& t,
               const VertexNames& names) {
  r.text << print_solution(g, t, names);
  r.doc["status"] = "feasible";
  r.doc["tree"] = tree_json(g, t, names);
}

void emit_infeasible(Report& r, const std::string& reason) {
  r.code = kExitNo;
  r.text << print_infeasible(reason);
  r.doc["status"] = "infeasible";
  r.doc["reason"] = reason;
}

std::string infeasible_reason(const std::optional<VertexId>& unrooted,
                              const VertexNames& names) {
  if (unrooted) {
    return "vertex " + names.label(*unrooted) + " has no in-edge";
  }
  return "no tree meets the color budgets";
}

void cmd_spt(const Options& o, bool minimize, Input& in, Report& r) {
  const InstanceFile f = parse_instance(in.read(o.file));
  const ColoredDigraph& g = f.graph;
  const VertexId s =
      pick_vertex(o.source, f.defaults.source, f.names, g.vertex_count(), "source");
  const ColorConstraint alpha = pick_alpha(o.alpha, f.defaults.alpha);
  SptOptions opts{solver_of(o.solver), sssp_of(o.sssp)};
  const Prepared p = prepare(g, s, o.restrict_reachable);
  SptResult res;
  try {
    res = minimize ? min_cc_spt(p.graph, p.source, alpha, opts)
                   : cc_spt(p.graph, p.source, alpha, opts);
  } catch (Error& e) {
    lift_error(p, g, e);
    throw;
  }
  r.text << "c solver " << solver_name(res.solver_used) << '\n'
         << "c sssp " << sssp_mode_name(res.distances.mode_used) << '\n'
         << "c spg-edges " << res.spg_edge_count << '\n';
  r.doc["solver"] = solver_name(res.solver_used);
  r.doc["sssp"] = sssp_mode_name(res.distances.mode_used);
  r.doc["spg_edges"] = res.spg_edge_count;
  if (res.phase_stats) {
    r.doc["dinitz"] = {{"phases", res.phase_stats->phases},
                       {"advances", res.phase_stats->advances},
                       {"retreats", res.phase_stats->retreats},
                       {"augments", res.phase_stats->augments}};
  }
  if (!res.tree) {
    emit_infeasible(r, infeasible_reason(res.unrooted_witness, f.names));
    return;
  }
  if (o.verify) {
    const auto v = verify_spt(p.graph, p.source, *res.tree, alpha);
    if (!v.empty()) {
      report_violations(r, v);
      r.code = kExitInternal;
      r.doc["status"] = "internal_error";
      return;
    }
    r.text << "c verified\n";
    r.doc["verified"] = true;
  }
  emit_tree(r, g, lift(p, g, *res.tree), f.names);
}

void cmd_arb(const Options& o, bool minimize, Input& in, Report& r) {
  const InstanceFile f = parse_instance(in.read(o.file));
  const ColoredDigraph& g = f.graph;
  const VertexId s =
      pick_vertex(o.source, f.defaults.source, f.names, g.vertex_count(), "source");
  const ColorConstraint alpha = pick_alpha(o.alpha, f.defaults.alpha);
  const Prepared p = prepare(g, s, o.restrict_reachable);
  SptResult res;
  try {
    const SpgGraph spg = spg_from_dag(p.graph, p.source);
    res = solve_arborescence(spg, alpha, minimize, solver_of(o.solver));
  } catch (Error& e) {
    lift_error(p, g, e);
    throw;
  }
  r.text << "c solver " << solver_name(res.solver_used) << '\n';
  r.doc["solver"] = solver_name(res.solver_used);
  if (!res.tree) {
    emit_infeasible(r, infeasible_reason(res.unrooted_witness, f.names));
    return;
  }
  if (o.verify) {
    const auto v = verify_arborescence(p.graph, p.source, *res.tree, alpha);
    if (!v.empty()) {
      report_violations(r, v);
      r.code = kExitInternal;
      r.doc["status"] = "internal_error";
      return;
    }
    r.text << "c verified\n";
    r.doc["verified"] = true;
  }
  emit_tree(r, g, lift(p, g, *res.tree), f.names);
}

void cmd_cc_sp(const Options& o, Input& in, Report& r) {
  const InstanceFile f = parse_instance(in.read(o.file));
  const ColoredDigraph& g = f.graph;
  const VertexId s =
      pick_vertex(o.source, f.defaults.source, f.names, g.vertex_count(), "source");
  const VertexId t =
      pick_vertex(o.target, f.defaults.target, f.names, g.vertex_count(), "target");
  const CcSpInstance inst{g, s, t, pick_alpha(o.alpha, f.defaults.alpha)};
  const CcSpAnswer a = cc_sp_decide(inst);
  if (!a.yes) {
    r.code = kExitNo;
    r.text << "c reason "
           << (a.reachable ? "no shortest path meets the color budgets"
                           : "target unreachable")
           << "\ns path 0\n";
    r.doc["status"] = "no";
    r.doc["reachable"] = a.reachable;
    if (a.reachable) r.doc["shortest"] = a.shortest;
    return;
  }
  r.text << print_path(g, *a.witness, f.names) << "s path 1 " << a.shortest;
  const auto counts = path_color_counts(g, *a.witness);
  for (std::int64_t c : counts) r.text << ' ' << c;
  r.text << '\n';
  json vertices = json::array();
  for (VertexId v : a.witness->vertices) vertices.push_back(f.names.label(v));
  r.doc["status"] = "yes";
  r.doc["shortest"] = a.shortest;
  r.doc["path"] = {{"vertices", vertices},
                   {"edges", a.witness->edges},
                   {"color_counts", counts}};
}

std::string with_comment(std::string text, const std::string& comment) {
  const std::size_t eol = text.find('\n');
  text.insert(eol + 1, comment);
  return text;
}

void cmd_reduce(const Options& o, bool to_cc, Input& in, Report& r) {
  const std::string text = in.read(o.file);
  if (to_cc) {
    const VccInstanceFile f = parse_vcc_instance(text);
    const int n = f.graph.vertex_count;
    const VccSpInstance inst{
        f.graph, pick_vertex(o.source, f.defaults.source, f.names, n, "source"),
        pick_vertex(o.target, f.defaults.target, f.names, n, "target"),
        pick_alpha(o.alpha, f.defaults.alpha)};
    const auto [cc, cert] = vcc_to_cc(inst);
    r.text << print_instance(cc.graph, {cc.source, cc.target, cc.alpha});
    r.doc["status"] = "ok";
    r.doc["instance"] = {{"format", "ccg"},
                         {"vertices", cc.graph.vertex_count()},
                         {"edges", cc.graph.edge_count()},
                         {"source", cc.source},
                         {"target", cc.target},
                         {"alpha", cc.alpha.values()},
                         {"weight_scale", cert.weight_scale}};
    return;
  }
  const InstanceFile f = parse_instance(text);
  const int n = f.graph.vertex_count();
  const CcSpInstance inst{
      f.graph, pick_vertex(o.source, f.defaults.source, f.names, n, "source"),
      pick_vertex(o.target, f.defaults.target, f.names, n, "target"),
      pick_alpha(o.alpha, f.defaults.alpha)};
  const auto [vcc, cert] = cc_to_vcc(inst);
  r.text << print_vcc_instance(vcc.graph, {vcc.source, vcc.target, vcc.alpha});
  r.doc["status"] = "ok";
  r.doc["instance"] = {{"format", "vcg"},
                       {"vertices", vcc.graph.vertex_count},
                       {"edges", vcc.graph.edges.size()},
                       {"source", vcc.source},
                       {"target", vcc.target},
                       {"alpha", vcc.alpha.values()},
                       {"weight_scale", cert.weight_scale}};
}

void cmd_at_least(const Options& o, Input& in, Report& r) {
  const InstanceFile f = parse_instance(in.read(o.file));
  const ColoredDigraph& g = f.graph;
  const VertexId s =
      pick_vertex(o.source, f.defaults.source, f.names, g.vertex_count(), "source");
  const ColorConstraint lower = pick_alpha(o.alpha, f.defaults.alpha);
  if (!o.solve) {
    const AtLeastInstance t = at_least_transform(g, lower);
    r.text << print_instance(t.graph, {s, std::nullopt, t.alpha});
    r.doc["status"] = "ok";
    r.doc["alpha"] = t.alpha.values();
    return;
  }
  const SptResult res =
      cc_spt_at_least(g, s, lower, {solver_of(o.solver), sssp_of(o.sssp)});
  r.doc["solver"] = solver_name(res.solver_used);
  if (!res.tree) {
    emit_infeasible(r, "no shortest path tree meets the lower bounds");
    return;
  }
  emit_tree(r, g, *res.tree, f.names);
}

void cmd_gen(const Options& o, const std::string& what, Report& r) {
  ColoredDigraph g;
  InstanceDefaults d;
  d.source = 0;
  testkit::Rng rng(testkit::derive_seed(o.seed, 0));
  if (what == "dag") {
    g = testkit::gen_random_dag(o.n, o.q, o.density, {o.wmin, o.wmax}, o.seed);
  } else if (what == "poscycle") {
    g = testkit::gen_random_positive_cycle_digraph(
        o.n, o.q, o.density, o.seed, {std::max<std::int64_t>(1, o.wmin),
                                      std::max(o.wmax, std::max<std::int64_t>(1, o.wmin))});
  } else {
    const auto dg = testkit::gen_random_simple_digraph(o.n, o.density, o.seed);
    const auto gadget = testkit::gen_hamiltonian_gadget(dg, 0);
    g = gadget.graph;
    d.alpha = gadget.alpha;
  }
  if (!d.alpha) {
    const std::int64_t n = g.vertex_count();
    d.alpha = testkit::gen_alpha(g.color_count(),
                                 rng.uniform(std::max<std::int64_t>(0, n - 2), 2 * n),
                                 rng);
  }
  r.text << with_comment(print_instance(g, d),
                         "c seed " + std::to_string(o.seed) + "\n");
  r.doc["status"] = "ok";
  r.doc["vertices"] = g.vertex_count();
  r.doc["edges"] = g.edge_count();
  r.doc["seed"] = o.seed;
}

void cmd_verify(const Options& o, bool spt, Input& in, Report& r) {
  const InstanceFile f = parse_instance(in.read(o.file));
  const ColoredDigraph& g = f.graph;
  const VertexId s =
      pick_vertex(o.source, f.defaults.source, f.names, g.vertex_count(), "source");
  const ColorConstraint alpha = pick_alpha(o.alpha, f.defaults.alpha);
  const Arborescence t = parse_solution(in.read(o.solution), g, s, f.names);
  const auto v = spt ? verify_spt(g, s, t, alpha)
                     : verify_arborescence(g, s, t, alpha);
  if (v.empty()) {
    r.text << "s verified 1\n";
    r.doc["status"] = "ok";
    return;
  }
  report_violations(r, v);
  r.text << "s verified 0\n";
  r.code = kExitNo;
  r.doc["status"] = "rejected";
}

// One corpus instance against the oracles; empty string when all agree.
std::string check_instance(const testkit::CorpusInstance& ci,
                           testkit::CorpusKind kind) {
  std::ostringstream why;
  if (kind == testkit::CorpusKind::kDag) {
    const SpgGraph spg = spg_from_dag(ci.graph, ci.source);
    const bool brute = testkit::brute_cc_arb_spg(spg, ci.alpha).has_value();
    const auto brute_min = testkit::brute_min_cc_arb(spg, ci.alpha);
    const ArbOutcome flow = cc_arb_flow(spg, ci.alpha);
    const ArbOutcome match = cc_arb_match(spg, ci.alpha);
    const ArbOutcome min_flow = min_cc_arb_flow(spg, ci.alpha);
    if (flow.feasible() != brute) why << " flow";
    if (match.feasible() != brute) why << " match";
    if (min_flow.feasible() != brute_min.has_value() ||
        (brute_min && min_flow.tree->total_weight != *brute_min)) {
      why << " min_flow";
    }
    for (const ArbOutcome* x : {&flow, &match, &min_flow}) {
      if (x->tree && !verify_arborescence(ci.graph, ci.source, *x->tree, ci.alpha)
                          .empty()) {
        why << " verify";
      }
    }
    if (ci.graph.color_count() == 2) {
      if (cc_rb_arb(spg, ci.alpha).feasible() != brute) why << " rb";
      const ArbOutcome min_rb = min_cc_rb_arb(spg, ci.alpha);
      if (min_rb.feasible() != brute_min.has_value() ||
          (brute_min && min_rb.tree->total_weight != *brute_min)) {
        why << " min_rb";
      }
    }
  } else {
    const SpgGraph spg = testkit::naive_spg(ci.graph, ci.source);
    const bool brute = testkit::brute_cc_arb_spg(spg, ci.alpha).has_value();
    const SptResult res = cc_spt(ci.graph, ci.source, ci.alpha);
    if (res.feasible() != brute) why << " cc_spt";
    if (res.tree && !verify_spt(ci.graph, ci.source, *res.tree, ci.alpha).empty()) {
      why << " verify";
    }
  }
  return why.str();
}

void cmd_corpus_check(const Options& o, Report& r) {
  testkit::CorpusParams params;
  params.count = o.count;
  params.max_n = o.n;
  params.max_q = o.q;
  if (o.kind == "dag") {
    params.kind = testkit::CorpusKind::kDag;
    params.weights = {o.wmin, o.wmax};
  } else if (o.kind == "poscycle") {
    params.kind = testkit::CorpusKind::kPositiveCycle;
    params.weights = {std::max<std::int64_t>(1, o.wmin),
                      std::max<std::int64_t>(1, o.wmax)};
  } else {
    throw Error(ErrorKind::kPrecondition, "unknown corpus kind '" + o.kind + "'");
  }
  if (o.threads > 0) omp_set_num_threads(o.threads);
  const testkit::Corpus corpus = testkit::gen_corpus(o.seed, params);
  std::vector<std::string> verdict(corpus.instances.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t i = 0; i < corpus.instances.size(); ++i) {
    try {
      verdict[i] = check_instance(corpus.instances[i], params.kind);
    } catch (const std::exception& e) {
      verdict[i] = std::string(" exception: ") + e.what();
    }
  }
  json failing = json::array();
  for (std::size_t i = 0; i < verdict.size(); ++i) {
    if (verdict[i].empty()) continue;
    const auto& ci = corpus.instances[i];
    r.text << "c mismatch seed " << ci.seed << ':' << verdict[i] << '\n';
    failing.push_back(ci.seed);
    if (!o.dump.empty()) {
      std::filesystem::create_directories(o.dump);
      std::ofstream(std::filesystem::path(o.dump) /
                    (std::to_string(ci.seed) + ".ccg"))
          << print_instance(ci.graph, {ci.source, std::nullopt, ci.alpha});
    }
  }
  r.text << "s corpus " << verdict.size() << ' ' << failing.size() << '\n';
  r.code = failing.empty() ? kExitOk : kExitNo;
  r.doc["status"] = failing.empty() ? "ok" : "mismatch";
  r.doc["checked"] = verdict.size();
  r.doc["mismatches"] = failing.size();
  r.doc["failing_seeds"] = failing;
}

Weight cycle_weight(const ColoredDigraph& g, const std::vector<EdgeId>& edges) {
  std::unordered_map<EdgeId, Weight> w;
  for (const EdgeRecord& e : g.edges()) w.emplace(e.original_index, e.weight);
  Weight total = 0;
  for (EdgeId e : edges) total += w.at(e);
  return total;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::kInternal ? kExitInternal : kExitInputError;
}

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Color-constrained shortest path trees and arborescences",
               "ccspt"};
  app.require_subcommand(1);
  Options o;

  const auto solver_flags = [&o](CLI::App* c) {
    c->add_option("file", o.file, "Instance file, - for stdin")->required();
    c->add_option("--source", o.source, "Root vertex (id or name)");
    c->add_option("--alpha", o.alpha, "Color budgets a1,a2,...");
    c->add_option("--solver", o.solver, "auto|flow|match|rb")
        ->check(CLI::IsMember({"auto", "flow", "match", "rb"}));
    c->add_flag("--restrict-reachable", o.restrict_reachable,
                "Drop vertices unreachable from the source first");
    c->add_flag("--verify", o.verify, "Check the produced tree");
    c->add_flag("--json", o.json, "Print one JSON summary document");
  };

  auto* spt = app.add_subcommand("cc-spt", "Shortest path tree within budgets");
  solver_flags(spt);
  spt->add_option("--sssp", o.sssp, "auto|bfs|dijkstra|bellman-ford");
  auto* min_spt =
      app.add_subcommand("min-cc-spt", "Lightest such tree (weights of the SPT edges)");
  solver_flags(min_spt);
  min_spt->add_option("--sssp", o.sssp, "auto|bfs|dijkstra|bellman-ford");
  auto* arb = app.add_subcommand("cc-arb", "Arborescence of a DAG within budgets");
  solver_flags(arb);
  auto* min_arb = app.add_subcommand("min-cc-arb", "Lightest such arborescence");
  solver_flags(min_arb);

  auto* sp = app.add_subcommand("cc-sp", "Shortest s-t path within budgets");
  sp->add_option("file", o.file, "Instance file, - for stdin")->required();
  sp->add_option("--source", o.source);
  sp->add_option("--target", o.target);
  sp->add_option("--alpha", o.alpha);
  sp->add_flag("--json", o.json);

  auto* reduce = app.add_subcommand("reduce", "Path-problem reductions");
  reduce->require_subcommand(1);
  auto* to_cc = reduce->add_subcommand("vcc-to-cc", "Vertex- to edge-colored");
  auto* to_vcc = reduce->add_subcommand("cc-to-vcc", "Edge- to vertex-colored");
  for (CLI::App* c : {to_cc, to_vcc}) {
    c->add_option("file", o.file)->required();
    c->add_option("--source", o.source);
    c->add_option("--target", o.target);
    c->add_option("--alpha", o.alpha);
    c->add_flag("--json", o.json);
  }

  auto* transform = app.add_subcommand("transform", "Instance transforms");
  transform->require_subcommand(1);
  auto* at_least =
      transform->add_subcommand("at-least", "Lower bounds to upper bounds");
  at_least->add_option("file", o.file)->required();
  at_least->add_option("--source", o.source);
  at_least->add_option("--alpha", o.alpha, "Lower bounds l1,l2,...");
  at_least->add_option("--solver", o.solver);
  at_least->add_flag("--solve", o.solve, "Solve instead of printing the instance");
  at_least->add_flag("--json", o.json);

  auto* gen = app.add_subcommand("gen", "Seeded instance generators");
  gen->require_subcommand(1);
  std::map<CLI::App*, std::string> gen_kind;
  for (const char* k : {"dag", "poscycle", "hamiltonian"}) {
    auto* c = gen->add_subcommand(k);
    gen_kind[c] = k;
    c->add_option("--n", o.n);
    c->add_option("--q", o.q);
    c->add_option("--density", o.density);
    c->add_option("--wmin", o.wmin);
    c->add_option("--wmax", o.wmax);
    c->add_option("--seed", o.seed);
    c->add_flag("--json", o.json);
  }

  auto* verify = app.add_subcommand("verify", "Check a solution file");
  verify->require_subcommand(1);
  auto* verify_arb = verify->add_subcommand("arb");
  auto* verify_spt_cmd = verify->add_subcommand("spt");
  for (CLI::App* c : {verify_arb, verify_spt_cmd}) {
    c->add_option("file", o.file)->required();
    c->add_option("solution", o.solution)->required();
    c->add_option("--source", o.source);
    c->add_option("--alpha", o.alpha);
    c->add_flag("--json", o.json);
  }

  auto* corpus = app.add_subcommand("corpus-check",
                                    "Seeded corpus against brute-force oracles");
  corpus->add_option("--kind", o.kind, "dag|poscycle");
  corpus->add_option("--count", o.count);
  corpus->add_option("--n", o.n, "Largest vertex count");
  corpus->add_option("--q", o.q, "Largest color count");
  corpus->add_option("--wmin", o.wmin);
  corpus->add_option("--wmax", o.wmax);
  corpus->add_option("--seed", o.seed);
  corpus->add_option("--threads", o.threads, "Worker threads, 0 = default");
  corpus->add_option("--dump", o.dump, "Directory for failing instances");
  corpus->add_flag("--json", o.json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  Report r;
  Input input(in);
  std::string command;
  try {
    if (*spt) {
      command = "cc-spt";
      cmd_spt(o, false, input, r);
    } else if (*min_spt) {
      command = "min-cc-spt";
      cmd_spt(o, true, input, r);
    } else if (*arb) {
      command = "cc-arb";
      cmd_arb(o, false, input, r);
    } else if (*min_arb) {
      command = "min-cc-arb";
      cmd_arb(o, true, input, r);
    } else if (*sp) {
      command = "cc-sp";
      cmd_cc_sp(o, input, r);
    } else if (*reduce) {
      command = *to_cc ? "reduce vcc-to-cc" : "reduce cc-to-vcc";
      cmd_reduce(o, to_cc->parsed(), input, r);
    } else if (*transform) {
      command = "transform at-least";
      cmd_at_least(o, input, r);
    } else if (*gen) {
      for (const auto& [c, k] : gen_kind) {
        if (*c) command = "gen " + k;
      }
      cmd_gen(o, command.substr(4), r);
    } else if (*verify) {
      command = *verify_spt_cmd ? "verify spt" : "verify arb";
      cmd_verify(o, verify_spt_cmd->parsed(), input, r);
    } else if (*corpus) {
      command = "corpus-check";
      cmd_corpus_check(o, r);
    }
    if (*reduce || *gen || (*transform && !o.solve)) {
      r.doc["instance_text"] = r.text.str();
    }
  } catch (const Error& e) {
    r = Report();
    r.code = exit_code_for(e.kind());
    r.doc["status"] = r.code == kExitInternal ? "internal_error" : "input_error";
    json ej = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
    err << "error: " << error_kind_name(e.kind()) << ": " << e.what() << '\n';
    if (e.line >= 0) ej["line"] = e.line;
    if (e.vertex >= 0) ej["vertex"] = e.vertex;
    if (!e.cycle_edges.empty()) {
      ej["cycle_vertices"] = e.cycle_vertices;
      ej["cycle_edges"] = e.cycle_edges;
      r.text << "c cycle";
      for (VertexId v : e.cycle_vertices) r.text << ' ' << v;
      r.text << "\nc cycle-edges";
      for (EdgeId x : e.cycle_edges) r.text << ' ' << x;
      r.text << '\n';
      // The witness refers to the input file's edges; re-read it for weights.
      try {
        const InstanceFile f = parse_instance(input.read(o.file));
        const Weight w = cycle_weight(f.graph, e.cycle_edges);
        ej["cycle_weight"] = w;
        r.text << "c cycle-weight " << w << '\n';
      } catch (const std::exception&) {
      }
    }
    r.doc["error"] = ej;
  } catch (const std::exception& e) {
    r = Report();
    r.code = kExitInternal;
    r.doc["status"] = "internal_error";
    r.doc["error"] = {{"kind", "Internal"}, {"message", e.what()}};
    err << "error: internal: " << e.what() << '\n';
  }

  if (o.json) {
    r.doc["command"] = command;
    r.doc["exit_code"] = r.code;
    out << r.doc.dump(2) << '\n';
  } else {
    out << r.text.str();
  }
  return r.code;
}

}  // namespace ccspt::cli
