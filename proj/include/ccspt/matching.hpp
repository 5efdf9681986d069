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

#ifndef CCSPT_MATCHING_HPP_
#define CCSPT_MATCHING_HPP_

#include <cstdint>
#include <vector>

namespace ccspt {

struct BipartiteGraph {
  std::int32_t left_count = 0;
  std::int32_t right_count = 0;
  std::vector<std::vector<std::int32_t>> adjacency;  // left -> right ids
};

struct Matching {
  std::vector<std::int32_t> left_of_right;  // -1 when unmatched
  std::vector<std::int32_t> right_of_left;
  std::int32_t size = 0;
};

// Maximum-cardinality matching by Hopcroft-Karp (shortest augmenting paths
// in phases). The augmenting search is iterative, so deep alternating
// paths do not grow the call stack.
Matching hopcroft_karp(const BipartiteGraph& b);

}  // namespace ccspt

#endif  // CCSPT_MATCHING_HPP_
