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

// Small graphs shared by the unit tests.

#ifndef CCSPT_TESTS_FIXTURES_HPP_
#define CCSPT_TESTS_FIXTURES_HPP_

#include <functional>
#include <vector>

#include "ccspt/error.hpp"
#include "ccspt/graph.hpp"

namespace ccspt::fixtures {

inline constexpr VertexId kS = 0;
inline constexpr VertexId kA = 1;
inline constexpr VertexId kB = 2;
inline constexpr VertexId kT = 3;

// Diamond: s->a, a->t in color 1; s->b, b->t in color 2; unit weights.
inline ColoredDigraph diamond() {
  return make_graph(4, 2, {{kS, kA, 1, 1},
                           {kS, kB, 2, 1},
                           {kA, kT, 1, 1},
                           {kB, kT, 2, 1}});
}

// The diamond with b->t weighing 5. Both s-t paths are no longer shortest,
// so this is used as a DAG, not through the SPT pipeline.
inline ColoredDigraph weighted_diamond() {
  return make_graph(4, 2, {{kS, kA, 1, 1},
                           {kS, kB, 2, 1},
                           {kA, kT, 1, 1},
                           {kB, kT, 2, 5}});
}

// True iff f throws an Error of the given kind.
inline bool throws_kind(const std::function<void()>& f, ErrorKind kind) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

inline ColorConstraint alpha(std::vector<std::int64_t> a) {
  return ColorConstraint(std::move(a));
}

}  // namespace ccspt::fixtures

#endif  // CCSPT_TESTS_FIXTURES_HPP_
