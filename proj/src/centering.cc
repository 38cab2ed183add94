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

#include "centering/centering.h"

#include <algorithm>
#include <array>
#include <utility>

#include "centering/corpus.h"
#include "json.hpp"

namespace centering {

namespace {

constexpr std::array<std::pair<Transition, std::string_view>, 7> kTransitionNames = {{
    {Transition::kFirst, "FIRST"},
    {Transition::kContinue, "CONTINUE"},
    {Transition::kRetain, "RETAIN"},
    {Transition::kSmoothShift, "SMOOTH_SHIFT"},
    {Transition::kRoughShift, "ROUGH_SHIFT"},
    {Transition::kCentEst, "CENT_EST"},
    {Transition::kOther, "OTHER"},
}};

constexpr std::array<std::pair<Bigram, std::string_view>, 3> kBigramNames = {{
    {Bigram::kContCont, "CONT_CONT"},
    {Bigram::kShiftCont, "SHIFT_CONT"},
    {Bigram::kRetCont, "RET_CONT"},
}};

// Rank classes, lower is better.
int RankClass(const Mention &m) {
  if (m.empathy) return 0;
  if (m.qis_or_arb) return 5;
  switch (m.role) {
    case Role::kSubject:
      return 1;
    case Role::kObject2:
      return 2;
    case Role::kObject:
      return 3;
    case Role::kOblique:
    case Role::kOther:
      return 4;
  }
  return 4;
}

bool IsDeictic(const Document &doc, const EntityId &id) {
  const Entity *e = doc.FindEntity(id);
  return e != nullptr && e->deictic;
}

bool IsAnimate(const Document &doc, const EntityId &id) {
  const Entity *e = doc.FindEntity(id);
  return e != nullptr && e->animate;
}

bool OnList(const std::vector<EntityId> &list, const EntityId &id) {
  return std::find(list.begin(), list.end(), id) != list.end();
}

// In focus directly, or as a member of a set that is in focus.
bool InFocus(const Document &doc, const GlobalFocus &focus, const EntityId &id) {
  if (focus.Contains(id)) return true;
  for (const EntityId &candidate : focus.entities) {
    const Entity *set = doc.FindEntity(candidate);
    if (set != nullptr && set->is_set && OnList(set->members, id)) return true;
  }
  return false;
}

}  // namespace

std::string_view ToString(Transition transition) {
  for (const auto &[t, name] : kTransitionNames) {
    if (t == transition) return name;
  }
  return "";
}

std::string_view ToString(Bigram bigram) {
  for (const auto &[b, name] : kBigramNames) {
    if (b == bigram) return name;
  }
  return "";
}

std::optional<Transition> ParseTransition(std::string_view s) {
  for (const auto &[t, name] : kTransitionNames) {
    if (name == s) return t;
  }
  return std::nullopt;
}

std::optional<Bigram> ParseBigram(std::string_view s) {
  for (const auto &[b, name] : kBigramNames) {
    if (name == s) return b;
  }
  return std::nullopt;
}

std::vector<EntityId> RankCf(const Document &doc, const CenteringUnit &unit) {
  std::vector<size_t> order(unit.mentions.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&unit](size_t a, size_t b) {
    return RankClass(unit.mentions[a]) < RankClass(unit.mentions[b]);
  });

  std::vector<EntityId> expanded;
  for (size_t i : order) {
    const Mention &m = unit.mentions[i];
    if (!m.possessor.has_value()) {
      expanded.push_back(m.entity);
    } else if (IsAnimate(doc, m.entity)) {
      expanded.push_back(m.entity);
      expanded.push_back(*m.possessor);
    } else {
      expanded.push_back(*m.possessor);
      expanded.push_back(m.entity);
    }
  }

  std::vector<EntityId> cf;
  for (const EntityId &id : expanded) {
    if (IsDeictic(doc, id) || OnList(cf, id)) continue;
    cf.push_back(id);
  }
  return cf;
}

bool Realizes(const CenteringUnit &unit, const EntityId &entity) {
  for (const Mention &m : unit.mentions) {
    if (m.entity == entity) return true;
    if (m.possessor.has_value() && *m.possessor == entity) return true;
  }
  return false;
}

std::optional<EntityId> ComputeCb(const CenteringUnit &unit,
                                  const CenteringState *prev) {
  if (prev == nullptr) return std::nullopt;
  if (prev->cb.has_value() && Realizes(unit, *prev->cb)) return prev->cb;
  for (const EntityId &candidate : prev->cf) {
    if (Realizes(unit, candidate)) return candidate;
  }
  return std::nullopt;
}

const Mention *UnitSubjectPronoun(const Document &doc, const CenteringUnit &unit) {
  if (!unit.head_subject.has_value()) return nullptr;
  const Mention &m = unit.mentions[*unit.head_subject];
  if (m.role != Role::kSubject || !IsSubjectPronounForm(m.form) || m.constrained) {
    return nullptr;
  }
  const Entity *e = doc.FindEntity(m.entity);
  if (e == nullptr || e->person != 3 || !e->animate) return nullptr;
  return &m;
}

Transition ClassifyTransition(const Document &doc, const CenteringState *prev,
                              const CenteringUnit &unit,
                              const std::optional<EntityId> &cb,
                              const std::vector<EntityId> &cf,
                              const GlobalFocus &focus) {
  if (prev == nullptr) return Transition::kFirst;
  if (unit.other_construction) return Transition::kOther;

  if (const Mention *pronoun = UnitSubjectPronoun(doc, unit)) {
    if (!OnList(prev->cf, pronoun->entity) && InFocus(doc, focus, pronoun->entity)) {
      return Transition::kCentEst;
    }
  }
  if (!cb.has_value()) return Transition::kCentEst;

  std::optional<EntityId> cp;
  if (!cf.empty()) cp = cf.front();
  bool same_cb = !prev->cb.has_value() || *prev->cb == *cb;
  bool cb_is_cp = cp.has_value() && *cp == *cb;
  if (same_cb) return cb_is_cp ? Transition::kContinue : Transition::kRetain;
  return cb_is_cp ? Transition::kSmoothShift : Transition::kRoughShift;
}

std::optional<Bigram> BigramLabel(Transition previous, Transition current) {
  if (current != Transition::kContinue) return std::nullopt;
  switch (previous) {
    case Transition::kContinue:
      return Bigram::kContCont;
    case Transition::kRetain:
      return Bigram::kRetCont;
    case Transition::kSmoothShift:
    case Transition::kRoughShift:
      return Bigram::kShiftCont;
    default:
      return std::nullopt;
  }
}

CenteringTracker::CenteringTracker(const Document &doc) : doc_(doc) {
  for (const Entity &e : doc.entities) {
    if (e.deictic) focus_.entities.insert(e.id);
  }
}

const CenteringState &CenteringTracker::Step(const CenteringUnit &unit) {
  const CenteringState *prev = states_.empty() ? nullptr : &states_.back();
  CenteringState state;
  state.unit = unit.id;
  state.cf = RankCf(doc_, unit);
  if (!state.cf.empty()) state.cp = state.cf.front();
  state.cb = ComputeCb(unit, prev);
  state.transition = ClassifyTransition(doc_, prev, unit, state.cb, state.cf, focus_);
  if (prev != nullptr) state.bigram = BigramLabel(prev->transition, state.transition);

  for (const Mention &m : unit.mentions) {
    focus_.entities.insert(m.entity);
    if (m.possessor.has_value()) focus_.entities.insert(*m.possessor);
  }
  states_.push_back(std::move(state));
  return states_.back();
}

std::vector<CenteringState> Analyze(const Document &doc,
                                    const SegmentOptions &options) {
  CenteringTracker tracker(doc);
  for (const CenteringUnit &unit : Segment(doc, options)) tracker.Step(unit);
  return tracker.states();
}

std::string StateToJson(const CenteringState &state) {
  nlohmann::ordered_json j;
  j["unit"] = state.unit;
  j["cf"] = state.cf;
  j["cb"] = state.cb.has_value() ? nlohmann::ordered_json(*state.cb) : nullptr;
  j["cp"] = state.cp.has_value() ? nlohmann::ordered_json(*state.cp) : nullptr;
  j["transition"] = ToString(state.transition);
  j["bigram"] = state.bigram.has_value()
                    ? nlohmann::ordered_json(ToString(*state.bigram))
                    : nlohmann::ordered_json(nullptr);
  return j.dump();
}

}  // namespace centering
