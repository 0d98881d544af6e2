/*
   Copyright 2026 The gwvi Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GWVI_CLI_HPP
#define GWVI_CLI_HPP

#include <string>
#include <vector>

namespace gwvi::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 2,
    inadmissible = 3,
    internal_error = 4,
};

struct Outcome {
    int exit_code = ok;
    std::string output;       // rendered result (stdout)
    std::string diagnostics;  // error text (stderr)
};

/// Parses `args` (without the program name), runs the subcommand and renders
/// its result. Never throws.
Outcome parse_and_dispatch(const std::vector<std::string>& args);

}  // namespace gwvi::cli

#endif  // GWVI_CLI_HPP
