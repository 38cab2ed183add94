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

// Null-subject interpretation from the clues available up to and including
// the verbal complex, and the form predictions derived from it.

#ifndef CENTERING_INTERPRETATION_H_
#define CENTERING_INTERPRETATION_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "centering/centering.h"
#include "centering/model.h"
#include "centering/segmentation.h"

namespace centering {

// Disambiguating material of a unit. Climbed clitics (and clitics before
// the finite verb) are seen early, with the agreement features; clitics
// left on a lower infinitive are seen only after the verbal complex.
struct ClueSet {
  Gender agr_gender = Gender::kUnspecified;
  Number agr_number = Number::kUnspecified;
  std::vector<EntityId> climbed_clitics;
  std::vector<EntityId> late_clitics;

  bool operator==(const ClueSet &) const = default;
};

struct Resolution {
  EntityId referent;
  bool default_was_overridden = false;
  bool garden_path = false;

  bool operator==(const Resolution &) const = default;
};

// No candidate on the previous Cf survives the clues.
class UnresolvedError : public Error {
 public:
  using Error::Error;
};

ClueSet ExtractClues(const CenteringUnit &unit);

// True if the entity agrees with the verbal complex and is not a climbed
// clitic of the same clause.
bool CompatibleEarly(const Document &doc, const ClueSet &clues,
                     const EntityId &candidate);

// Resolves the unit's null subject against prev.cf, best candidate first.
// Late clitics still exclude their referent but arrive too late to prevent
// the default reading: when that default was prev.cb, the resolution is a
// garden path. Throws UnresolvedError when nothing is compatible and Error
// when the unit has no null subject or prev.cf is empty.
Resolution ResolveNullSubject(const Document &doc, const CenteringUnit &unit,
                              const CenteringState &prev, const ClueSet &clues);

enum class FormPrediction { kNullSubject, kStrongPronoun, kEither };

std::string_view ToString(FormPrediction prediction);

FormPrediction PredictForm(const Document &doc, Transition transition,
                           const std::optional<Bigram> &bigram,
                           const ClueSet &clues, const CenteringState &prev);

struct AuditRecord {
  std::string mention;
  Transition transition = Transition::kFirst;
  std::optional<Bigram> bigram;
  FormPrediction predicted = FormPrediction::kEither;
  MentionForm actual = MentionForm::kNullSubject;
  ClueSet clues;

  bool operator==(const AuditRecord &) const = default;
};

// Compares every eligible pronoun outside the first unit with the form
// predicted for its unit; one record per disagreement, in document order.
std::vector<AuditRecord> Audit(const Document &doc,
                               const SegmentOptions &options = {});

// One compact JSON object per record.
std::string AuditRecordToJson(const AuditRecord &record);

}  // namespace centering

#endif  // CENTERING_INTERPRETATION_H_
