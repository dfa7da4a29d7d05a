// Copyright 2026 The srsearch Authors.
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

#ifndef SRSEARCH_CLI_H_
#define SRSEARCH_CLI_H_

#include <ostream>

namespace srsearch {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitBridgeUnavailable = 3,
  kExitRuntimeFailure = 4,
};

// Entry point of the `srsearch` tool: corpus, search, analyze and lowres
// subcommands. Machine output goes to `out`, diagnostics to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace srsearch

#endif  // SRSEARCH_CLI_H_
