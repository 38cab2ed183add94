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

// A second, deliberately naive count of the pronoun distribution. It reads
// the raw document JSON and the serialized `analyze` output and never
// touches the library's own tallying code.

#ifndef CENTERING_TESTS_RECOUNT_H_
#define CENTERING_TESTS_RECOUNT_H_

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "centering/cli.h"
#include "centering/corpus.h"
#include "json.hpp"
#include "test_util.h"

namespace centering::testing {

struct SyntheticCorpus {
  std::vector<std::string> paths;
  std::vector<Document> documents;
};

inline SyntheticCorpus LoadSyntheticCorpus() {
  SyntheticCorpus corpus;
  auto expected = nlohmann::json::parse(ReadFile(DataPath("synthetic/expected.json")));
  for (const auto &d : expected["documents"]) {
    std::string path = DataPath("synthetic/" + d["file"].get<std::string>());
    corpus.paths.push_back(path);
    corpus.documents.push_back(ParseDocument(ReadFile(path)));
  }
  return corpus;
}

struct Recount {
  std::array<std::array<int, 5>, 2> transitions{};  // [null, strong]
  std::array<std::array<int, 2>, 2> bigrams{};
};

// Unit id of the clause's unit. Merging clauses climb to their host unless
// the host is dropped, in which case they head their own unit.
inline std::string UnitOfClause(const std::map<std::string, nlohmann::json> &clauses,
                                const nlohmann::json &clause) {
  auto merges = [](const std::string &kind) {
    return kind == "tenseless_adjunct" || kind == "complement";
  };
  const nlohmann::json *c = &clause;
  for (int guard = 0; guard < 1000 && merges((*c)["kind"]); ++guard) {
    const nlohmann::json &host = clauses.at((*c)["attach_to"].get<std::string>());
    if (host["kind"] == "relative" || host["kind"] == "impersonal") break;
    c = &host;
  }
  return (*c)["id"];
}

inline Recount RecountFromAnalysis(const SyntheticCorpus &corpus) {
  static const std::map<std::string, int> kColumn = {
      {"CONTINUE", 0}, {"RETAIN", 1}, {"SMOOTH_SHIFT", 2},
      {"ROUGH_SHIFT", 2}, {"CENT_EST", 3}, {"OTHER", 4}};
  Recount r;
  for (const std::string &path : corpus.paths) {
    RunConfig config;
    config.command = Command::kAnalyze;
    config.inputs = {path};
    RunResult analyzed = Run(config);
    std::map<std::string, nlohmann::json> states;
    for (const std::string &line : Lines(analyzed.out)) {
      auto s = nlohmann::json::parse(line);
      states[s["unit"]] = s;
    }

    auto doc = nlohmann::json::parse(ReadFile(path));
    std::set<std::string> eligible_entities;
    for (const auto &e : doc["entities"]) {
      if (e.value("animate", false) && e.value("person", 3) == 3) {
        eligible_entities.insert(e["id"].get<std::string>());
      }
    }
    for (const auto &sentence : doc["sentences"]) {
      std::map<std::string, nlohmann::json> clauses;
      for (const auto &c : sentence["clauses"]) clauses[c["id"]] = c;
      for (const auto &c : sentence["clauses"]) {
        if (c["kind"] == "relative" || c["kind"] == "impersonal") continue;
        for (const auto &m : c["mentions"]) {
          if (m["role"] != "subject" || m.value("constrained", false)) continue;
          if (m["form"] != "null" && m["form"] != "strong") continue;
          if (!eligible_entities.count(m["entity"])) continue;
          const nlohmann::json &s = states.at(UnitOfClause(clauses, c));
          if (s["transition"] == "FIRST") continue;
          int row = m["form"] == "null" ? 0 : 1;
          int column = kColumn.at(s["transition"]);
          ++r.transitions[row][column];
          if (column == 0) ++r.bigrams[row][s["bigram"] == "RET_CONT" ? 1 : 0];
        }
      }
    }
  }
  return r;
}

}  // namespace centering::testing

#endif  // CENTERING_TESTS_RECOUNT_H_
