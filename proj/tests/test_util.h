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

// Shared helpers for the test binaries: data files and a small builder for
// documents written inline.

#ifndef CENTERING_TESTS_TEST_UTIL_H_
#define CENTERING_TESTS_TEST_UTIL_H_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "centering/corpus.h"
#include "centering/model.h"

namespace centering::testing {

inline std::string DataPath(const std::string &relative) {
  return std::string(CENTERING_DATA_DIR) + "/" + relative;
}

inline std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline Document LoadDocument(const std::string &relative) {
  return ParseDocument(ReadFile(DataPath(relative)));
}

inline std::vector<std::string> Lines(const std::string &text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// Builds documents clause by clause. Mentions and clauses get sequential
// ids and positions; modifiers apply to the most recent mention.
class DocBuilder {
 public:
  explicit DocBuilder(std::string doc_id = "doc") { doc_.doc_id = std::move(doc_id); }

  DocBuilder &Person(const std::string &id, Gender g = Gender::kUnspecified,
                     Number n = Number::kSingular) {
    doc_.entities.push_back({id, true, g, n, 3, false, {}, false});
    return *this;
  }
  DocBuilder &Thing(const std::string &id, Gender g = Gender::kUnspecified) {
    doc_.entities.push_back({id, false, g, Number::kSingular, 3, false, {}, false});
    return *this;
  }
  DocBuilder &Deictic(const std::string &id, int person = 1) {
    doc_.entities.push_back(
        {id, true, Gender::kUnspecified, Number::kSingular, person, false, {}, true});
    return *this;
  }
  DocBuilder &Set(const std::string &id, std::vector<EntityId> members, int person = 3) {
    doc_.entities.push_back({id, true, Gender::kUnspecified, Number::kPlural, person, true,
                             std::move(members), person != 3});
    return *this;
  }

  DocBuilder &Sentence() {
    doc_.sentences.push_back({"s" + std::to_string(doc_.sentences.size() + 1), {}});
    return *this;
  }

  DocBuilder &Clause(const std::string &id, ClauseKind kind = ClauseKind::kMain,
                     std::optional<std::string> attach_to = std::nullopt) {
    if (doc_.sentences.empty()) Sentence();
    auto &clauses = doc_.sentences.back().clauses;
    centering::Clause c;
    c.id = id;
    c.kind = kind;
    c.attach_to = std::move(attach_to);
    c.order = static_cast<int>(clauses.size());
    if (kind == ClauseKind::kTenselessAdjunct) c.verbal_complex.tensed = false;
    clauses.push_back(std::move(c));
    return *this;
  }
  DocBuilder &Order(int order) {
    clause().order = order;
    return *this;
  }
  DocBuilder &Agr(Gender g, Number n = Number::kUnspecified) {
    clause().verbal_complex.agr_gender = g;
    clause().verbal_complex.agr_number = n;
    return *this;
  }
  DocBuilder &OtherConstruction() {
    clause().other_construction = true;
    return *this;
  }

  DocBuilder &M(const std::string &entity, MentionForm form, Role role) {
    Mention m;
    m.id = "m" + std::to_string(++mentions_);
    m.entity = entity;
    m.form = form;
    m.role = role;
    m.surface_pos = mentions_;
    if (form == MentionForm::kWeakClitic) m.clitic_position = CliticPosition::kClimbed;
    clause().mentions.push_back(std::move(m));
    return *this;
  }
  DocBuilder &Null(const std::string &entity) {
    return M(entity, MentionForm::kNullSubject, Role::kSubject);
  }
  DocBuilder &Strong(const std::string &entity) {
    return M(entity, MentionForm::kStrongPronoun, Role::kSubject);
  }
  DocBuilder &Name(const std::string &entity, Role role = Role::kSubject) {
    return M(entity, MentionForm::kName, role);
  }
  DocBuilder &Np(const std::string &entity, Role role) {
    return M(entity, MentionForm::kFullNp, role);
  }
  DocBuilder &Clitic(const std::string &entity, CliticPosition position,
                     Role role = Role::kObject) {
    M(entity, MentionForm::kWeakClitic, role);
    mention().clitic_position = position;
    return *this;
  }

  DocBuilder &Possessor(const std::string &entity) {
    mention().possessor = entity;
    return *this;
  }
  DocBuilder &Empathy() {
    mention().empathy = true;
    return *this;
  }
  DocBuilder &Qis() {
    mention().qis_or_arb = true;
    return *this;
  }
  DocBuilder &Constrained() {
    mention().constrained = true;
    return *this;
  }
  DocBuilder &At(int surface_pos) {
    mention().surface_pos = surface_pos;
    return *this;
  }

  Document Build() const { return doc_; }

 private:
  centering::Clause &clause() { return doc_.sentences.back().clauses.back(); }
  Mention &mention() { return clause().mentions.back(); }

  Document doc_;
  int mentions_ = 0;
};

}  // namespace centering::testing

#endif  // CENTERING_TESTS_TEST_UTIL_H_
