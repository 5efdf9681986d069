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

#ifndef CCSPT_ERROR_HPP_
#define CCSPT_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ccspt {

enum class ErrorKind {
  kBadVertexId,
  kBadColorId,
  kSelfLoop,
  kPrecondition,
  kNegativeCycleReachable,
  kUnreachableVertex,
  kNonPositiveCycle,
  kNotAcyclic,
  kWrongColorCount,
  kLowerBoundTooLarge,
  kBudgetStateOverflow,
  kTooManyArborescences,
  kInstanceTooLarge,
  kParseError,
  kPrecisionError,
  kInternal,
};

std::string_view error_kind_name(ErrorKind kind);

// Every failure raised by the library. The payload fields are populated
// depending on the kind: `vertex` for kUnreachableVertex, `cycle_vertices`
// and `cycle_edges` for kNonPositiveCycle, `line` for kParseError.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  std::int64_t vertex = -1;
  std::int64_t line = -1;
  std::vector<std::int32_t> cycle_vertices;
  std::vector<std::int32_t> cycle_edges;

 private:
  ErrorKind kind_;
};

}  // namespace ccspt

#endif  // CCSPT_ERROR_HPP_
