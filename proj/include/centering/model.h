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

#ifndef CENTERING_MODEL_H_
#define CENTERING_MODEL_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace centering {

using EntityId = std::string;

enum class Gender { kMasculine, kFeminine, kUnspecified };
enum class Number { kSingular, kPlural, kUnspecified };

enum class MentionForm {
  kNullSubject,
  kStrongPronoun,
  kWeakClitic,
  kFullNp,
  kName,
  kOtherAnaphor,
};

// Grammatical role, in Cf rank order (empathy and qis/pro_arb are flags).
enum class Role { kSubject, kObject2, kObject, kOblique, kOther };

enum class CliticPosition { kClimbed, kInSitu, kNone };

enum class ClauseKind {
  kMain,
  kConjunct,
  kTensedAdjunct,
  kTenselessAdjunct,
  kComplement,
  kRelative,
  kImpersonal,
};

// A discourse referent. Sets carry their member ids; deictic entities are
// situational participants (speaker, addressee).
struct Entity {
  EntityId id;
  bool animate = false;
  Gender gender = Gender::kUnspecified;
  Number number = Number::kUnspecified;
  int person = 3;
  bool is_set = false;
  std::vector<EntityId> members;
  bool deictic = false;

  bool operator==(const Entity &) const = default;
};

// One realization of an entity inside a clause.
struct Mention {
  std::string id;
  EntityId entity;
  MentionForm form = MentionForm::kFullNp;
  Role role = Role::kOther;
  int surface_pos = 0;
  bool empathy = false;
  bool qis_or_arb = false;
  CliticPosition clitic_position = CliticPosition::kNone;
  std::optional<EntityId> possessor;
  bool constrained = false;

  bool operator==(const Mention &) const = default;
};

// Agreement window of a clause: finite verb plus agreeing participles.
// Agreement features are those shared with the subject.
struct VerbalComplex {
  bool tensed = true;
  Gender agr_gender = Gender::kUnspecified;
  Number agr_number = Number::kUnspecified;

  bool operator==(const VerbalComplex &) const = default;
};

struct Clause {
  std::string id;
  ClauseKind kind = ClauseKind::kMain;
  std::optional<std::string> attach_to;
  int order = 0;
  bool other_construction = false;
  VerbalComplex verbal_complex;
  std::vector<Mention> mentions;

  bool operator==(const Clause &) const = default;
};

struct Sentence {
  std::string id;
  std::vector<Clause> clauses;

  bool operator==(const Sentence &) const = default;
};

struct Document {
  std::string doc_id;
  std::vector<Entity> entities;
  std::vector<Sentence> sentences;

  // Linear lookup; documents are small.
  const Entity *FindEntity(std::string_view id) const;

  bool operator==(const Document &) const = default;
};

// True when the clause kind needs a host clause.
bool IsAttachedKind(ClauseKind kind);

// True for pronominal subject forms counted by the statistics.
inline bool IsSubjectPronounForm(MentionForm form) {
  return form == MentionForm::kNullSubject ||
         form == MentionForm::kStrongPronoun;
}

// Agreement unification; unspecified unifies with everything.
inline bool Unifies(Gender a, Gender b) {
  return a == Gender::kUnspecified || b == Gender::kUnspecified || a == b;
}
inline bool Unifies(Number a, Number b) {
  return a == Number::kUnspecified || b == Number::kUnspecified || a == b;
}

// Wire names used by the document file format.
std::string_view ToString(Gender gender);
std::string_view ToString(Number number);
std::string_view ToString(MentionForm form);
std::string_view ToString(Role role);
std::string_view ToString(ClauseKind kind);
// Returns "climbed", "in_situ" or "" for kNone.
std::string_view ToString(CliticPosition position);

std::optional<Gender> ParseGender(std::string_view s);
std::optional<Number> ParseNumber(std::string_view s);
std::optional<MentionForm> ParseMentionForm(std::string_view s);
std::optional<Role> ParseRole(std::string_view s);
std::optional<ClauseKind> ParseClauseKind(std::string_view s);
std::optional<CliticPosition> ParseCliticPosition(std::string_view s);

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Line and column are 1-based; zero when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Reference to an id that is not declared.
class ReferenceError : public Error {
 public:
  ReferenceError(const std::string &message, std::string id)
      : Error(message), id_(std::move(id)) {}
  const std::string &id() const { return id_; }

 private:
  std::string id_;
};

// The same id declared twice.
class DuplicateError : public Error {
 public:
  DuplicateError(const std::string &message, std::string id)
      : Error(message), id_(std::move(id)) {}
  const std::string &id() const { return id_; }

 private:
  std::string id_;
};

}  // namespace centering

#endif  // CENTERING_MODEL_H_
