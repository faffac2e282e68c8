// Copyright 2026 The bosonbench Authors
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

#ifndef BOSONBENCH_CLI_HPP
#define BOSONBENCH_CLI_HPP

#include <string>
#include <vector>

namespace bb {

/// Dispatches one CLI invocation (args exclude the program name).
/// Subcommands: estimate, curve, normalize, simulate, budget, monitor,
/// accuracy. Returns 0 on success, 1 on computation or data errors, 2 on
/// usage errors; failures emit a JSON error record on stderr.
int run_command(const std::vector<std::string>& args);

}  // namespace bb

#endif  // BOSONBENCH_CLI_HPP
