// Copyright 2026 The homewheel Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace homewheel {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,  // constraint or feasibility failure
    kExitUsage = 2,
    kExitParse = 3,
};

// Runs the command line. args excludes the program name, e.g. {"simulate", "--n", "2"}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homewheel
