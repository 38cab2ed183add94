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

#include "centering/interpretation.h"

#include <algorithm>
#include <map>

#include "centering/corpus.h"
#include "json.hpp"

namespace centering {

namespace {

bool Contains(const std::vector<EntityId> &list, const EntityId &id) {
  return std::find(list.begin(), list.end(), id) != list.end();
}

void AddUnique(std::vector<EntityId> &list, const EntityId &id) {
  if (!Contains(list, id)) list.push_back(id);
}

const Mention *NullSubject(const CenteringUnit &unit) {
  if (unit.head_subject.has_value()) {
    const Mention &m = unit.mentions[*unit.head_subject];
    if (m.form == MentionForm::kNullSubject) return &m;
  }
  return nullptr;
}

}  // namespace

ClueSet ExtractClues(const CenteringUnit &unit) {
  ClueSet clues;
  clues.agr_gender = unit.verbal_complex.agr_gender;
  clues.agr_number = unit.verbal_complex.agr_number;
  for (const Mention &m : unit.mentions) {
    if (m.form != MentionForm::kWeakClitic) continue;
    if (m.clitic_position == CliticPosition::kClimbed) {
      AddUnique(clues.climbed_clitics, m.entity);
    } else if (m.clitic_position == CliticPosition::kInSitu) {
      AddUnique(clues.late_clitics, m.entity);
    }
  }
  // An entity seen early is not a late clue.
  std::erase_if(clues.late_clitics, [&clues](const EntityId &id) {
    return Contains(clues.climbed_clitics, id);
  });
  return clues;
}

bool CompatibleEarly(const Document &doc, const ClueSet &clues,
                     const EntityId &candidate) {
  const Entity *e = doc.FindEntity(candidate);
  if (e == nullptr) return false;
  if (!Unifies(e->gender, clues.agr_gender)) return false;
  if (!Unifies(e->number, clues.agr_number)) return false;
  return !Contains(clues.climbed_clitics, candidate);
}

Resolution ResolveNullSubject(const Document &doc, const CenteringUnit &unit,
                              const CenteringState &prev, const ClueSet &clues) {
  if (NullSubject(unit) == nullptr) {
    throw Error("unit \"" + unit.id + "\" has no null subject");
  }
  if (prev.cf.empty()) {
    throw Error("previous unit \"" + prev.unit + "\" has an empty Cf list");
  }

  std::optional<EntityId> early;
  std::optional<EntityId> resolved;
  for (const EntityId &candidate : prev.cf) {
    if (!CompatibleEarly(doc, clues, candidate)) continue;
    if (!early.has_value()) early = candidate;
    if (!resolved.has_value() && !Contains(clues.late_clitics, candidate)) {
      resolved = candidate;
    }
  }
  if (!resolved.has_value()) {
    throw UnresolvedError("no compatible antecedent for the null subject of unit \"" +
                          unit.id + "\"");
  }

  Resolution r;
  r.referent = *resolved;
  r.default_was_overridden = prev.cb.has_value() && *resolved != *prev.cb &&
                             Contains(prev.cf, *prev.cb);
  r.garden_path = prev.cb.has_value() && early.has_value() && *early == *prev.cb &&
                  Contains(clues.late_clitics, *prev.cb);
  return r;
}

std::string_view ToString(FormPrediction prediction) {
  switch (prediction) {
    case FormPrediction::kNullSubject:
      return "null";
    case FormPrediction::kStrongPronoun:
      return "strong";
    case FormPrediction::kEither:
      return "either";
  }
  return "";
}

FormPrediction PredictForm(const Document &doc, Transition transition,
                           const std::optional<Bigram> &bigram,
                           const ClueSet &clues, const CenteringState &prev) {
  switch (transition) {
    case Transition::kContinue:
      return bigram == Bigram::kRetCont ? FormPrediction::kEither
                                        : FormPrediction::kNullSubject;
    case Transition::kRetain:
    case Transition::kSmoothShift:
    case Transition::kRoughShift:
      if (prev.cb.has_value() && !CompatibleEarly(doc, clues, *prev.cb)) {
        return FormPrediction::kNullSubject;
      }
      return FormPrediction::kStrongPronoun;
    default:
      return FormPrediction::kEither;
  }
}

std::vector<AuditRecord> Audit(const Document &doc, const SegmentOptions &options) {
  std::vector<CenteringUnit> units = Segment(doc, options);
  CenteringTracker tracker(doc);
  for (const CenteringUnit &unit : units) tracker.Step(unit);
  const std::vector<CenteringState> &states = tracker.states();

  std::map<std::string, size_t> unit_of_mention;
  for (size_t i = 0; i < units.size(); ++i) {
    for (const Mention &m : units[i].mentions) unit_of_mention.emplace(m.id, i);
  }

  std::vector<AuditRecord> records;
  for (const Mention &pronoun : EligiblePronouns(doc)) {
    auto it = unit_of_mention.find(pronoun.id);
    if (it == unit_of_mention.end() || it->second == 0) continue;
    size_t i = it->second;
    const CenteringState &state = states[i];
    ClueSet clues = ExtractClues(units[i]);
    FormPrediction predicted =
        PredictForm(doc, state.transition, state.bigram, clues, states[i - 1]);
    if (predicted == FormPrediction::kEither) continue;
    bool matches = (predicted == FormPrediction::kNullSubject) ==
                   (pronoun.form == MentionForm::kNullSubject);
    if (matches) continue;
    records.push_back({pronoun.id, state.transition, state.bigram, predicted,
                       pronoun.form, std::move(clues)});
  }
  return records;
}

std::string AuditRecordToJson(const AuditRecord &record) {
  nlohmann::ordered_json j;
  j["mention"] = record.mention;
  j["transition"] = ToString(record.transition);
  j["bigram"] = record.bigram.has_value()
                    ? nlohmann::ordered_json(ToString(*record.bigram))
                    : nlohmann::ordered_json(nullptr);
  j["predicted"] = ToString(record.predicted);
  j["actual"] = ToString(record.actual);
  nlohmann::ordered_json clues;
  clues["agr_gender"] = ToString(record.clues.agr_gender);
  clues["agr_number"] = ToString(record.clues.agr_number);
  clues["climbed"] = record.clues.climbed_clitics;
  clues["late"] = record.clues.late_clitics;
  j["clues"] = std::move(clues);
  return j.dump();
}

}  // namespace centering
