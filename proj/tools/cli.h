// Copyright 2026 The Contextua Authors
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

#ifndef CONTEXTUA_TOOLS_CLI_H
#define CONTEXTUA_TOOLS_CLI_H

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "contextua/report.h"

namespace contextua::cli {

enum class MbqcMode { Run, Table, Report };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitIndeterminate = 3;

struct AnalyzeInputs {
    std::string observables;
    std::optional<std::string> contexts;
    std::optional<std::string> pins;
};

/// Explicit contexts (from either file) take precedence over clique search;
/// observables outside every explicit context become singleton contexts.
Report cmd_analyze(const AnalyzeInputs &inputs);

/// Built-in Mermin system, once state-independent and once pinned to the GHZ
/// eigenvalues of the three-qubit observables.
Report cmd_mermin();

Report cmd_mbqc(std::string_view instance_json, MbqcMode mode, const std::optional<std::string> &input_bits = {});

/// Full command line front end. Returns the process exit code.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace contextua::cli

#endif
