// Copyright 2026 The qsv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSV_CLI_APP_HPP_
#define QSV_CLI_APP_HPP_

#include <ostream>

namespace qsv::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,         // output could not be written
  kExitUsage = 2,      // bad flags, config or library precondition
  kExitInvariant = 3,  // output written but an invariant check failed
};

/// Entry point of the `qsv` tool. Results go to --out (or `out` when unset),
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsv::cli

#endif  // QSV_CLI_APP_HPP_
