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

#include "centering/model.h"

#include <array>
#include <utility>

namespace centering {

namespace {

template <typename E, size_t N>
using NameTable = std::array<std::pair<E, std::string_view>, N>;

constexpr NameTable<Gender, 3> kGenderNames = {{
    {Gender::kMasculine, "masc"},
    {Gender::kFeminine, "fem"},
    {Gender::kUnspecified, "unspec"},
}};

constexpr NameTable<Number, 3> kNumberNames = {{
    {Number::kSingular, "sg"},
    {Number::kPlural, "pl"},
    {Number::kUnspecified, "unspec"},
}};

constexpr NameTable<MentionForm, 6> kFormNames = {{
    {MentionForm::kNullSubject, "null"},
    {MentionForm::kStrongPronoun, "strong"},
    {MentionForm::kWeakClitic, "clitic"},
    {MentionForm::kFullNp, "np"},
    {MentionForm::kName, "name"},
    {MentionForm::kOtherAnaphor, "other"},
}};

constexpr NameTable<Role, 5> kRoleNames = {{
    {Role::kSubject, "subject"},
    {Role::kObject2, "object2"},
    {Role::kObject, "object"},
    {Role::kOblique, "oblique"},
    {Role::kOther, "other"},
}};

constexpr NameTable<ClauseKind, 7> kKindNames = {{
    {ClauseKind::kMain, "main"},
    {ClauseKind::kConjunct, "conjunct"},
    {ClauseKind::kTensedAdjunct, "tensed_adjunct"},
    {ClauseKind::kTenselessAdjunct, "tenseless_adjunct"},
    {ClauseKind::kComplement, "complement"},
    {ClauseKind::kRelative, "relative"},
    {ClauseKind::kImpersonal, "impersonal"},
}};

constexpr NameTable<CliticPosition, 3> kCliticNames = {{
    {CliticPosition::kClimbed, "climbed"},
    {CliticPosition::kInSitu, "in_situ"},
    {CliticPosition::kNone, ""},
}};

template <typename E, size_t N>
std::string_view NameOf(const NameTable<E, N> &table, E value) {
  for (const auto &[v, name] : table) {
    if (v == value) return name;
  }
  return "";
}

template <typename E, size_t N>
std::optional<E> ValueOf(const NameTable<E, N> &table, std::string_view name) {
  for (const auto &[v, n] : table) {
    if (n == name) return v;
  }
  return std::nullopt;
}

}  // namespace

const Entity *Document::FindEntity(std::string_view id) const {
  for (const Entity &entity : entities) {
    if (entity.id == id) return &entity;
  }
  return nullptr;
}

bool IsAttachedKind(ClauseKind kind) {
  switch (kind) {
    case ClauseKind::kTensedAdjunct:
    case ClauseKind::kTenselessAdjunct:
    case ClauseKind::kComplement:
    case ClauseKind::kRelative:
      return true;
    default:
      return false;
  }
}

std::string_view ToString(Gender gender) { return NameOf(kGenderNames, gender); }
std::string_view ToString(Number number) { return NameOf(kNumberNames, number); }
std::string_view ToString(MentionForm form) { return NameOf(kFormNames, form); }
std::string_view ToString(Role role) { return NameOf(kRoleNames, role); }
std::string_view ToString(ClauseKind kind) { return NameOf(kKindNames, kind); }
std::string_view ToString(CliticPosition position) {
  return NameOf(kCliticNames, position);
}

std::optional<Gender> ParseGender(std::string_view s) {
  return ValueOf(kGenderNames, s);
}
std::optional<Number> ParseNumber(std::string_view s) {
  return ValueOf(kNumberNames, s);
}
std::optional<MentionForm> ParseMentionForm(std::string_view s) {
  return ValueOf(kFormNames, s);
}
std::optional<Role> ParseRole(std::string_view s) {
  return ValueOf(kRoleNames, s);
}
std::optional<ClauseKind> ParseClauseKind(std::string_view s) {
  return ValueOf(kKindNames, s);
}
std::optional<CliticPosition> ParseCliticPosition(std::string_view s) {
  if (s.empty()) return std::nullopt;
  return ValueOf(kCliticNames, s);
}

ParseError::ParseError(const std::string &message, int line, int column)
    : Error(line > 0 ? message + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"
                     : message),
      line_(line),
      column_(column) {}

}  // namespace centering
