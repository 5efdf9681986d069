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

#include "ccspt/error.hpp"

namespace ccspt {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kBadVertexId: return "BadVertexId";
    case ErrorKind::kBadColorId: return "BadColorId";
    case ErrorKind::kSelfLoop: return "SelfLoop";
    case ErrorKind::kPrecondition: return "PreconditionViolated";
    case ErrorKind::kNegativeCycleReachable: return "NegativeCycleReachable";
    case ErrorKind::kUnreachableVertex: return "UnreachableVertex";
    case ErrorKind::kNonPositiveCycle: return "NonPositiveCycle";
    case ErrorKind::kNotAcyclic: return "NotAcyclic";
    case ErrorKind::kWrongColorCount: return "WrongColorCount";
    case ErrorKind::kLowerBoundTooLarge: return "LowerBoundTooLarge";
    case ErrorKind::kBudgetStateOverflow: return "BudgetStateOverflow";
    case ErrorKind::kTooManyArborescences: return "TooManyArborescences";
    case ErrorKind::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kPrecisionError: return "PrecisionError";
    case ErrorKind::kInternal: return "InternalError";
  }
  return "Unknown";
}

}  // namespace ccspt
