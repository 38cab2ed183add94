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

#include "centering/cli.h"

#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>

#include "CLI11.hpp"
#include "centering/centering.h"
#include "centering/corpus.h"
#include "centering/interpretation.h"
#include "json.hpp"

namespace centering {

namespace {

using ordered_json = nlohmann::ordered_json;

// Everything learned from one input file. Exactly one of doc/observations
// is set when error is empty.
struct Loaded {
  std::string path;
  int status = 0;
  std::string error;
  std::optional<Document> doc;
  std::vector<Observation> observations;
  std::string analysis;  // analyze or audit output for this document
};

bool ReadFile(const std::string &path, std::string *bytes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return false;
  *bytes = buffer.str();
  return true;
}

// Observation files are recognized by their top-level key.
bool LooksLikeObservations(const std::string &bytes) {
  auto j = nlohmann::json::parse(bytes, nullptr, false);
  return j.is_object() && j.contains("observations");
}

std::string ErrorMessage(const std::string &path, const Error &e) {
  if (const auto *pe = dynamic_cast<const ParseError *>(&e)) {
    if (pe->line() > 0) {
      return path + ":" + std::to_string(pe->line()) + ":" + std::to_string(pe->column()) +
             ": " + e.what() + "\n";
    }
  }
  return path + ": " + e.what() + "\n";
}

std::string ViolationReport(const std::string &path, const std::vector<Violation> &violations) {
  std::string out;
  for (const Violation &v : violations) {
    out += path + ": " + v.invariant + " " + v.id + ": " + v.message + "\n";
  }
  return out;
}

Loaded Load(const std::string &path, const RunConfig &config) {
  Loaded l;
  l.path = path;
  std::string bytes;
  if (!ReadFile(path, &bytes)) {
    l.status = 2;
    l.error = path + ": cannot read file\n";
    return l;
  }
  const bool observations_allowed =
      config.command == Command::kTables || config.command == Command::kStats;
  SegmentOptions options{config.split_complements};
  try {
    if (observations_allowed && LooksLikeObservations(bytes)) {
      l.observations = ParseObservations(bytes);
      return l;
    }
    Document doc = ParseDocument(bytes);
    std::vector<Violation> violations = ValidateDocument(doc);
    if (!violations.empty()) {
      l.status = 1;
      l.error = ViolationReport(path, violations);
      return l;
    }
    switch (config.command) {
      case Command::kAnalyze:
        for (const CenteringState &s : Analyze(doc, options)) l.analysis += StateToJson(s) + "\n";
        break;
      case Command::kAudit:
        for (const AuditRecord &r : Audit(doc, options)) {
          l.analysis += AuditRecordToJson(r) + "\n";
        }
        break;
      case Command::kTables:
      case Command::kStats:
        l.observations = Observations(doc, options);
        break;
      case Command::kValidate:
        break;
    }
    l.doc = std::move(doc);
  } catch (const Error &e) {
    l.status = 1;
    l.error = ErrorMessage(path, e);
  }
  return l;
}

RunResult Fail(int code, std::string err) {
  RunResult r;
  r.exit_code = code;
  r.err = std::move(err);
  return r;
}

std::string StatsLine(const ChiSquareResult &r, TableFormat format, const std::string &key) {
  if (format == TableFormat::kJson) {
    ordered_json j;
    if (!key.empty()) j["key"] = key;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", r.statistic);
    j["statistic"] = std::stod(buf);
    j["p"] = r.Bracket();
    return j.dump() + "\n";
  }
  std::string line = r.ToString() + "\n";
  if (key.empty()) return line;
  return key + (format == TableFormat::kTsv ? "\t" : " ") + line;
}

RunResult Produce(const RunConfig &config) {
  if (config.command == Command::kStats && config.cells.has_value()) {
    if (!config.inputs.empty()) return Fail(1, "stats: --cells and input files are exclusive\n");
    try {
      return {0, StatsLine(ChiSquare(*config.cells), config.format, ""), ""};
    } catch (const DegenerateTableError &e) {
      return Fail(1, std::string("stats: ") + e.what() + "\n");
    }
  }
  if (config.inputs.empty()) return Fail(1, "no input files\n");

  // Inputs are independent; load them concurrently and report in order.
  std::vector<std::future<Loaded>> pending;
  for (const std::string &path : config.inputs) {
    pending.push_back(std::async(std::launch::async, Load, path, std::cref(config)));
  }
  std::vector<Loaded> loaded;
  for (auto &f : pending) loaded.push_back(f.get());

  int status = 0;
  std::string err;
  for (const Loaded &l : loaded) {
    status = std::max(status, l.status);
    err += l.error;
  }
  if (status != 0) return Fail(status, err);

  RunResult result;
  const bool several = loaded.size() > 1;
  switch (config.command) {
    case Command::kValidate:
      break;
    case Command::kAnalyze:
    case Command::kAudit:
      for (const Loaded &l : loaded) {
        if (several) {
          ordered_json header;
          header["document"] = l.doc->doc_id;
          result.out += header.dump() + "\n";
        }
        result.out += l.analysis;
      }
      break;
    case Command::kTables:
    case Command::kStats: {
      std::vector<Observation> all;
      for (const Loaded &l : loaded) {
        all.insert(all.end(), l.observations.begin(), l.observations.end());
      }
      DistributionTable table = Tally(all);
      if (config.command == Command::kTables) {
        result.out = RenderTables(table, config.format);
        break;
      }
      for (const NamedContingency &nc : ContingencyTables(table)) {
        try {
          result.out += StatsLine(ChiSquare(nc.table), config.format, nc.key);
        } catch (const DegenerateTableError &e) {
          return Fail(1, "stats: " + nc.key + ": " + e.what() + "\n");
        }
      }
      break;
    }
  }
  return result;
}

}  // namespace

std::optional<ContingencyTable> ParseCells(const std::string &text) {
  std::vector<long> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos ||
        item.size() > 15) {
      return std::nullopt;
    }
    values.push_back(std::stol(item));
  }
  if (values.size() != 4 || text.back() == ',') return std::nullopt;
  return ContingencyTable{values[0], values[1], values[2], values[3]};
}

ParsedCommandLine ParseCommandLine(int argc, const char *const *argv) {
  CLI::App app{"Centering analysis of annotated discourse"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  std::string cells;
  std::string output;

  struct Spec {
    const char *name;
    const char *help;
    Command command;
  };
  const Spec specs[] = {
      {"validate", "Check documents against the schema invariants", Command::kValidate},
      {"analyze", "Print one centering state per unit (JSON lines)", Command::kAnalyze},
      {"audit", "Print form-prediction mismatches (JSON lines)", Command::kAudit},
      {"tables", "Render distribution and contingency tables", Command::kTables},
      {"stats", "Chi-square statistics for given cells or derived tables", Command::kStats},
  };
  std::vector<std::pair<CLI::App *, Command>> subcommands;
  for (const Spec &spec : specs) {
    CLI::App *sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("inputs", config.inputs, "Input files");
    sub->add_flag("--split-complements", config.split_complements,
                  "Treat complement clauses as units of their own");
    sub->add_option("-o,--output", output, "Write output to PATH");
    if (spec.command == Command::kTables || spec.command == Command::kStats) {
      sub->add_option("--format", format, "Output format")
          ->check(CLI::IsMember({"text", "tsv", "json"}));
    }
    if (spec.command == Command::kStats) {
      sub->add_option("--cells", cells, "Contingency cells a,b,c,d");
    }
    subcommands.emplace_back(sub, spec.command);
  }

  ParsedCommandLine parsed;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    std::ostringstream out, err;
    // --help is the only "error" that succeeds; usage errors exit 1.
    parsed.result.exit_code = app.exit(e, out, err) == 0 ? 0 : 1;
    parsed.result.out = out.str();
    parsed.result.err = err.str();
    return parsed;
  }
  for (const auto &[sub, command] : subcommands) {
    if (sub->parsed()) config.command = command;
  }
  config.format = *ParseTableFormat(format);
  if (!output.empty()) config.output = output;
  if (!cells.empty()) {
    config.cells = ParseCells(cells);
    if (!config.cells.has_value()) {
      parsed.result = Fail(1, "--cells: expected four nonnegative integers a,b,c,d\n");
      return parsed;
    }
  }
  parsed.config = std::move(config);
  return parsed;
}

RunResult Run(const RunConfig &config) {
  RunResult result = Produce(config);
  if (result.exit_code != 0 || !config.output.has_value()) return result;
  std::ofstream out(*config.output, std::ios::binary | std::ios::trunc);
  out << result.out;
  out.close();
  if (!out) return Fail(2, *config.output + ": cannot write file\n");
  result.out.clear();
  return result;
}

}  // namespace centering
