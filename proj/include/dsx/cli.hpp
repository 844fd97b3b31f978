// Copyright 2026 The dsx Authors
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

// Driver behind the `dsxc` command.
//
// Exit codes:
//   0  success
//   1  diagnostics failure (any error; any warning with --fail-on-warning;
//      generation failure; fmt --check found unformatted files)
//   2  usage or I/O failure
//
// A batch keeps going past per-file failures and exits with the worst code.

#ifndef DSX_CLI_HPP_
#define DSX_CLI_HPP_

#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "dsx/codegen.hpp"

namespace dsx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiagnostics = 1;
inline constexpr int kExitUsage = 2;

enum class ReportFormat { kText, kJson };

struct CliConfig {
  std::vector<std::string> input_paths;  // files, directories or globs
  std::filesystem::path out_dir;
  std::set<Target> targets;
  ReportFormat report_format = ReportFormat::kText;
  bool fail_on_warning = false;
  bool check_only = false;  // fmt --check
};

/// Resolves files, directories (searched recursively for *.dsx) and glob
/// patterns into a sorted, duplicate-free file list. Unmatched globs and
/// missing paths are reported in `errors`.
std::vector<std::filesystem::path> ExpandInputs(
    const std::vector<std::string>& inputs, std::vector<std::string>& errors);

int CmdCheck(const CliConfig& config, std::ostream& out, std::ostream& err);
int CmdGen(const CliConfig& config, std::ostream& out, std::ostream& err);
int CmdFmt(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses `argv` and dispatches to the matching subcommand.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace dsx::cli

#endif  // DSX_CLI_HPP_
