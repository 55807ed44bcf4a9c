// Copyright 2026 The tlhom Authors.
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

#ifndef TLHOM_CLI_HPP_
#define TLHOM_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace tlhom::cli {

enum ExitCode : int {
  kOk = 0,
  kComputationFailure = 1,
  kUsageError = 2,
  kVerificationFailure = 3,
};

// Runs one invocation. `args` excludes the program name. Results go to
// `out` (or to --out PATH), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "%.12g"
std::string format_number(double x);

}  // namespace tlhom::cli

#endif  // TLHOM_CLI_HPP_
