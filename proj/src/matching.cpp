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

#include "ccspt/matching.hpp"

#include <deque>
#include <limits>

namespace ccspt {

Matching hopcroft_karp(const BipartiteGraph& b) {
  constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max();
  Matching m;
  m.left_of_right.assign(b.right_count, -1);
  m.right_of_left.assign(b.left_count, -1);
  std::vector<std::int32_t> dist(b.left_count);
  std::vector<std::size_t> next(b.left_count);
  std::vector<std::int32_t> stack;
  std::deque<std::int32_t> queue;

  while (true) {
    // Layer the free left vertices at 0; free_dist is the length of the
    // shortest augmenting path, measured in left vertices.
    queue.clear();
    for (std::int32_t u = 0; u < b.left_count; ++u) {
      if (m.right_of_left[u] < 0) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = kInf;
      }
    }
    std::int32_t free_dist = kInf;
    while (!queue.empty()) {
      const std::int32_t u = queue.front();
      queue.pop_front();
      if (dist[u] >= free_dist) continue;
      for (std::int32_t r : b.adjacency[u]) {
        const std::int32_t w = m.left_of_right[r];
        if (w < 0) {
          if (free_dist == kInf) free_dist = dist[u] + 1;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    if (free_dist == kInf) break;

    for (std::int32_t u = 0; u < b.left_count; ++u) next[u] = 0;
    for (std::int32_t root = 0; root < b.left_count; ++root) {
      if (m.right_of_left[root] >= 0 || dist[root] != 0) continue;
      stack.assign(1, root);
      while (!stack.empty()) {
        const std::int32_t u = stack.back();
        const auto& adj = b.adjacency[u];
        if (next[u] == adj.size()) {
          dist[u] = kInf;  // dead for the rest of this phase
          stack.pop_back();
          if (!stack.empty()) ++next[stack.back()];
          continue;
        }
        const std::int32_t r = adj[next[u]];
        const std::int32_t w = m.left_of_right[r];
        if (w < 0 && dist[u] + 1 == free_dist) {
          // Flip the alternating path held on the stack.
          for (std::int32_t x : stack) {
            const std::int32_t xr = b.adjacency[x][next[x]];
            m.right_of_left[x] = xr;
            m.left_of_right[xr] = x;
            dist[x] = kInf;  // paths within a phase are vertex-disjoint
          }
          ++m.size;
          stack.clear();
        } else if (w >= 0 && dist[w] == dist[u] + 1) {
          stack.push_back(w);
        } else {
          ++next[u];
        }
      }
    }
  }
  return m;
}

}  // namespace ccspt
