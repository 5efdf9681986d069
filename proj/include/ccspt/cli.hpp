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

// Command-line driver. Exit codes: 0 feasible / yes / ok, 1 infeasible /
// no / failed verification, 2 input error, 3 internal invariant failure.

#ifndef CCSPT_CLI_HPP_
#define CCSPT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "ccspt/error.hpp"

namespace ccspt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternal = 3;

int exit_code_for(ErrorKind kind);

// args excludes the program name. A file argument "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace ccspt::cli

#endif  // CCSPT_CLI_HPP_
