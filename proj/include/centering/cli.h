// Copyright 2026 The Centering Authors.
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

// Command-line front end. Run() is pure apart from reading the inputs and
// writing --output, so tests drive it directly.

#ifndef CENTERING_CLI_H_
#define CENTERING_CLI_H_

#include <optional>
#include <string>
#include <vector>

#include "centering/stats.h"

namespace centering {

enum class Command { kValidate, kAnalyze, kAudit, kTables, kStats };

struct RunConfig {
  Command command = Command::kValidate;
  std::vector<std::string> inputs;
  bool split_complements = false;
  TableFormat format = TableFormat::kText;
  std::optional<ContingencyTable> cells;
  std::optional<std::string> output;
};

struct RunResult {
  int exit_code = 0;
  std::string out;  // empty whenever exit_code != 0
  std::string err;
};

// Parses argv. On --help or a usage error the result carries the text to
// print and the exit status instead of a config.
struct ParsedCommandLine {
  std::optional<RunConfig> config;
  RunResult result;
};

ParsedCommandLine ParseCommandLine(int argc, const char *const *argv);

// Parses "a,b,c,d" into a table.
std::optional<ContingencyTable> ParseCells(const std::string &text);

// Exit status 0 on success, 1 for invalid documents or degenerate tables,
// 2 for unreadable files.
RunResult Run(const RunConfig &config);

}  // namespace centering

#endif  // CENTERING_CLI_H_
