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

#include "ccspt/flow.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

namespace ccspt {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

// Paired residual arcs: 2i is arc i, 2i+1 its reverse.
class Residual {
 public:
  explicit Residual(const FlowNetwork& net) : net_(net) {
    const std::size_t m = net.arcs.size();
    cap_.resize(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      cap_[2 * i] = net.arcs[i].capacity;
      cap_[2 * i + 1] = 0;
    }
    offsets_.assign(net.node_count + 1, 0);
    for (const FlowArc& a : net.arcs) {
      ++offsets_[a.from + 1];
      ++offsets_[a.to + 1];
    }
    for (std::int32_t v = 0; v < net.node_count; ++v) {
      offsets_[v + 1] += offsets_[v];
    }
    adj_.resize(2 * m);
    std::vector<std::int32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < m; ++i) {
      adj_[cursor[net.arcs[i].from]++] = static_cast<std::int32_t>(2 * i);
      adj_[cursor[net.arcs[i].to]++] = static_cast<std::int32_t>(2 * i + 1);
    }
  }

  std::int32_t from(std::int32_t a) const {
    const FlowArc& arc = net_.arcs[a >> 1];
    return (a & 1) ? arc.to : arc.from;
  }
  std::int32_t to(std::int32_t a) const {
    const FlowArc& arc = net_.arcs[a >> 1];
    return (a & 1) ? arc.from : arc.to;
  }
  std::int64_t cost(std::int32_t a) const {
    const std::int64_t c = net_.arcs[a >> 1].cost;
    return (a & 1) ? -c : c;
  }
  std::int64_t& cap(std::int32_t a) { return cap_[a]; }
  std::int32_t begin(std::int32_t v) const { return offsets_[v]; }
  std::int32_t end(std::int32_t v) const { return offsets_[v + 1]; }
  std::int32_t arc_at(std::int32_t slot) const { return adj_[slot]; }

  void push(std::int32_t a, std::int64_t amount) {
    cap_[a] -= amount;
    cap_[a ^ 1] += amount;
  }

  FlowAssignment to_assignment() const {
    FlowAssignment f;
    f.flow.resize(net_.arcs.size());
    for (std::size_t i = 0; i < net_.arcs.size(); ++i) {
      f.flow[i] = cap_[2 * i + 1];
      if (net_.arcs[i].from == net_.source) f.value += f.flow[i];
      if (net_.arcs[i].to == net_.source) f.value -= f.flow[i];
      f.total_cost += f.flow[i] * net_.arcs[i].cost;
    }
    return f;
  }

 private:
  const FlowNetwork& net_;
  std::vector<std::int64_t> cap_;
  std::vector<std::int32_t> offsets_;
  std::vector<std::int32_t> adj_;
};

}  // namespace

std::int32_t FlowNetwork::add_node(NodeRole r, std::int32_t l) {
  role.push_back(r);
  label.push_back(l);
  return node_count++;
}

std::int32_t FlowNetwork::add_arc(std::int32_t from, std::int32_t to,
                                  std::int64_t capacity, std::int64_t cost) {
  arcs.push_back({from, to, capacity, cost});
  return static_cast<std::int32_t>(arcs.size() - 1);
}

FlowNetwork build_arb_network(const SpgGraph& spg, const ColorConstraint& alpha,
                              const InDegreeByColor& pi, bool with_costs) {
  const ColoredDigraph& g = spg.base;
  const int n = g.vertex_count();
  const int q = g.color_count();
  if (static_cast<int>(alpha.size()) != q) {
    throw Error(ErrorKind::kWrongColorCount,
                "color constraint length does not match the color count");
  }

  FlowNetwork net;
  net.source = net.add_node(NodeRole::kSource);
  net.sink = net.add_node(NodeRole::kSink);
  for (ColorId c = 1; c <= q; ++c) net.add_node(NodeRole::kColor, c);
  net.node_of_vertex.assign(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (v == spg.root) continue;
    net.node_of_vertex[v] = net.add_node(NodeRole::kVertex, v);
  }

  std::vector<Weight> min_weight;
  if (with_costs) {
    min_weight.assign(static_cast<std::size_t>(n) * q,
                      std::numeric_limits<Weight>::max());
    for (const EdgeRecord& e : g.edges()) {
      Weight& slot = min_weight[static_cast<std::size_t>(e.head) * q + e.color - 1];
      slot = std::min(slot, e.weight);
    }
  }

  const std::int64_t cap_limit = std::max(0, n - 1);
  for (ColorId c = 1; c <= q; ++c) {
    net.add_arc(net.source, FlowNetwork::color_node(c),
                std::clamp<std::int64_t>(alpha.bound(c), 0, cap_limit));
  }
  for (ColorId c = 1; c <= q; ++c) {
    for (VertexId v = 0; v < n; ++v) {
      if (v == spg.root || pi.count(v, c) == 0) continue;
      const std::int64_t cost =
          with_costs ? min_weight[static_cast<std::size_t>(v) * q + c - 1] : 0;
      net.add_arc(FlowNetwork::color_node(c), net.node_of_vertex[v], 1, cost);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (v == spg.root) continue;
    net.add_arc(net.node_of_vertex[v], net.sink, 1);
  }
  return net;
}

FlowAssignment dinitz_max_flow(const FlowNetwork& net) {
  Residual res(net);
  DinitzStats stats;
  const std::int32_t s = net.source;
  const std::int32_t t = net.sink;
  std::vector<std::int32_t> level(net.node_count);
  std::vector<std::int32_t> current(net.node_count);
  std::vector<std::int32_t> path;
  std::deque<std::int32_t> queue;

  while (true) {
    // Initialize: level graph of the residual network.
    std::fill(level.begin(), level.end(), -1);
    level[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const std::int32_t u = queue.front();
      queue.pop_front();
      for (std::int32_t k = res.begin(u); k < res.end(u); ++k) {
        const std::int32_t a = res.arc_at(k);
        const std::int32_t v = res.to(a);
        if (res.cap(a) > 0 && level[v] < 0) {
          level[v] = level[u] + 1;
          queue.push_back(v);
        }
      }
    }
    if (level[t] < 0) break;
    ++stats.phases;

    for (std::int32_t v = 0; v < net.node_count; ++v) current[v] = res.begin(v);
    path.clear();
    std::int32_t u = s;
    while (true) {
      if (u == t) {
        std::int64_t bottleneck = kInf;
        for (std::int32_t a : path) bottleneck = std::min(bottleneck, res.cap(a));
        for (std::int32_t a : path) res.push(a, bottleneck);
        ++stats.augments;
        // Resume from the tail of the first saturated arc.
        std::size_t k = 0;
        while (res.cap(path[k]) > 0) ++k;
        u = res.from(path[k]);
        path.resize(k);
        continue;
      }
      bool advanced = false;
      for (; current[u] < res.end(u); ++current[u]) {
        const std::int32_t a = res.arc_at(current[u]);
        const std::int32_t v = res.to(a);
        if (res.cap(a) > 0 && level[v] == level[u] + 1) {
          path.push_back(a);
          u = v;
          advanced = true;
          break;
        }
      }
      if (advanced) {
        ++stats.advances;
        continue;
      }
      ++stats.retreats;
      if (u == s) break;
      level[u] = -1;  // delete u from the level graph
      const std::int32_t a = path.back();
      path.pop_back();
      u = res.from(a);
      ++current[u];
    }
  }

  FlowAssignment f = res.to_assignment();
  f.phases_executed = stats.phases;
  f.stats = stats;
  return f;
}

FlowAssignment min_cost_max_flow(const FlowNetwork& net) {
  Residual res(net);
  const std::int32_t s = net.source;
  const std::int32_t t = net.sink;
  const std::int32_t nodes = net.node_count;

  // Bellman-Ford potentials over arcs with positive capacity.
  std::vector<std::int64_t> potential(nodes, kInf);
  potential[s] = 0;
  for (std::int32_t round = 0; round < nodes; ++round) {
    bool changed = false;
    for (std::int32_t a = 0; a < static_cast<std::int32_t>(2 * net.arcs.size());
         ++a) {
      const std::int32_t u = res.from(a);
      if (res.cap(a) <= 0 || potential[u] == kInf) continue;
      const std::int64_t cand = potential[u] + res.cost(a);
      if (cand < potential[res.to(a)]) {
        potential[res.to(a)] = cand;
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::vector<std::int64_t> dist(nodes);
  std::vector<std::int32_t> via(nodes);
  using Item = std::pair<std::int64_t, std::int32_t>;
  std::int64_t augmentations = 0;
  while (true) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(via.begin(), via.end(), -1);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = 0;
    heap.emplace(0, s);
    while (!heap.empty()) {
      const auto [du, u] = heap.top();
      heap.pop();
      if (du != dist[u]) continue;
      for (std::int32_t k = res.begin(u); k < res.end(u); ++k) {
        const std::int32_t a = res.arc_at(k);
        if (res.cap(a) <= 0) continue;
        const std::int32_t v = res.to(a);
        const std::int64_t reduced = res.cost(a) + potential[u] - potential[v];
        if (du + reduced < dist[v]) {
          dist[v] = du + reduced;
          via[v] = a;
          heap.emplace(dist[v], v);
        }
      }
    }
    if (dist[t] == kInf) break;
    for (std::int32_t v = 0; v < nodes; ++v) {
      if (dist[v] != kInf) potential[v] += dist[v];
    }
    std::int64_t bottleneck = kInf;
    for (std::int32_t v = t; v != s; v = res.from(via[v])) {
      bottleneck = std::min(bottleneck, res.cap(via[v]));
    }
    for (std::int32_t v = t; v != s; v = res.from(via[v])) {
      res.push(via[v], bottleneck);
    }
    ++augmentations;
  }

  FlowAssignment f = res.to_assignment();
  f.stats.augments = augmentations;
  return f;
}

std::int64_t residual_cut_capacity(const FlowNetwork& net,
                                   const FlowAssignment& f) {
  std::vector<std::vector<std::int32_t>> out(net.node_count);
  std::vector<std::vector<std::int32_t>> in(net.node_count);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    out[net.arcs[i].from].push_back(static_cast<std::int32_t>(i));
    in[net.arcs[i].to].push_back(static_cast<std::int32_t>(i));
  }
  std::vector<std::uint8_t> reached(net.node_count, 0);
  std::vector<std::int32_t> stack{net.source};
  reached[net.source] = 1;
  while (!stack.empty()) {
    const std::int32_t u = stack.back();
    stack.pop_back();
    for (std::int32_t i : out[u]) {
      const std::int32_t v = net.arcs[i].to;
      if (!reached[v] && f.flow[i] < net.arcs[i].capacity) {
        reached[v] = 1;
        stack.push_back(v);
      }
    }
    for (std::int32_t i : in[u]) {
      const std::int32_t v = net.arcs[i].from;
      if (!reached[v] && f.flow[i] > 0) {
        reached[v] = 1;
        stack.push_back(v);
      }
    }
  }
  std::int64_t capacity = 0;
  for (const FlowArc& a : net.arcs) {
    if (reached[a.from] && !reached[a.to]) capacity += a.capacity;
  }
  return capacity;
}

bool is_feasible_flow(const FlowNetwork& net, const FlowAssignment& f) {
  if (f.flow.size() != net.arcs.size()) return false;
  std::vector<std::int64_t> excess(net.node_count, 0);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    if (f.flow[i] < 0 || f.flow[i] > net.arcs[i].capacity) return false;
    excess[net.arcs[i].from] -= f.flow[i];
    excess[net.arcs[i].to] += f.flow[i];
  }
  for (std::int32_t v = 0; v < net.node_count; ++v) {
    if (v == net.source || v == net.sink) continue;
    if (excess[v] != 0) return false;
  }
  return excess[net.sink] == f.value && excess[net.source] == -f.value;
}

}  // namespace ccspt
