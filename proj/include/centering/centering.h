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

// Cf ranking, Cb computation and transition classification.

#ifndef CENTERING_CENTERING_H_
#define CENTERING_CENTERING_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "centering/model.h"
#include "centering/segmentation.h"

namespace centering {

enum class Transition {
  kFirst,
  kContinue,
  kRetain,
  kSmoothShift,
  kRoughShift,
  kCentEst,
  kOther,
};

// A CONTINUE qualified by the transition that precedes it.
enum class Bigram { kContCont, kShiftCont, kRetCont };

std::string_view ToString(Transition transition);
std::string_view ToString(Bigram bigram);
std::optional<Transition> ParseTransition(std::string_view s);
std::optional<Bigram> ParseBigram(std::string_view s);

struct CenteringState {
  std::string unit;
  std::vector<EntityId> cf;  // highest ranked first
  std::optional<EntityId> cb;
  std::optional<EntityId> cp;
  Transition transition = Transition::kFirst;
  std::optional<Bigram> bigram;

  bool operator==(const CenteringState &) const = default;
};

// Entities available beyond the previous Cf: everything mentioned in an
// earlier unit plus every deictic entity of the document.
struct GlobalFocus {
  std::set<EntityId> entities;

  bool Contains(const EntityId &id) const { return entities.count(id) > 0; }
};

// Orders the unit's entities: empathy > subject > object2 > object >
// others > qis/pro_arb, ties broken by mention order. Deictic entities are
// left out. A possessor is placed right before its possessed entity when
// that entity is inanimate and right after it when animate. Each entity
// keeps only its highest-ranked occurrence.
std::vector<EntityId> RankCf(const Document &doc, const CenteringUnit &unit);

// True if the unit realizes the entity as a mention or as a possessor.
// Membership in a realized set does not count.
bool Realizes(const CenteringUnit &unit, const EntityId &entity);

// The backward-looking center. The previous Cb is kept when the unit
// realizes it; otherwise the highest-ranked element of prev.cf that the
// unit realizes. Absent for the first unit or when nothing is realized.
std::optional<EntityId> ComputeCb(const CenteringUnit &unit,
                                  const CenteringState *prev);

// The head clause's subject when it is an eligible pronoun.
const Mention *UnitSubjectPronoun(const Document &doc, const CenteringUnit &unit);

// Classifies the unit. FIRST without a previous state; OTHER for flagged
// constructions; CENT_EST when the subject pronoun picks an entity from
// the global focus that is not on the previous Cf (members of focused sets
// included) or when no Cb exists; otherwise CONTINUE, RETAIN, SMOOTH_SHIFT
// or ROUGH_SHIFT from the two Cbs and the Cp. An undefined previous Cb is
// compatible with any current Cb.
Transition ClassifyTransition(const Document &doc, const CenteringState *prev,
                              const CenteringUnit &unit,
                              const std::optional<EntityId> &cb,
                              const std::vector<EntityId> &cf,
                              const GlobalFocus &focus);

// CONT_CONT, RET_CONT or SHIFT_CONT for a CONTINUE following a CONTINUE,
// RETAIN or shift; nothing otherwise.
std::optional<Bigram> BigramLabel(Transition previous, Transition current);

// Left-to-right fold over the units of one document.
class CenteringTracker {
 public:
  explicit CenteringTracker(const Document &doc);

  // Computes the state of the next unit and advances the focus.
  const CenteringState &Step(const CenteringUnit &unit);

  const GlobalFocus &focus() const { return focus_; }
  const std::vector<CenteringState> &states() const { return states_; }

 private:
  const Document &doc_;
  GlobalFocus focus_;
  std::vector<CenteringState> states_;
};

// Segments the document and computes one state per unit.
std::vector<CenteringState> Analyze(const Document &doc,
                                    const SegmentOptions &options = {});

// One compact JSON object: {"unit","cf","cb","cp","transition","bigram"}.
std::string StateToJson(const CenteringState &state);

}  // namespace centering

#endif  // CENTERING_CENTERING_H_
