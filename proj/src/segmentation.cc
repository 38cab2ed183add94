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

#include "centering/segmentation.h"

#include <algorithm>
#include <map>
#include <set>

#include "centering/corpus.h"

namespace centering {

namespace {

enum class Disposition { kHead, kMerge, kDrop };

Disposition DispositionOf(ClauseKind kind, const SegmentOptions &options) {
  switch (kind) {
    case ClauseKind::kMain:
    case ClauseKind::kConjunct:
    case ClauseKind::kTensedAdjunct:
      return Disposition::kHead;
    case ClauseKind::kComplement:
      return options.split_complements ? Disposition::kHead : Disposition::kMerge;
    case ClauseKind::kTenselessAdjunct:
      return Disposition::kMerge;
    case ClauseKind::kRelative:
    case ClauseKind::kImpersonal:
      return Disposition::kDrop;
  }
  return Disposition::kDrop;
}

class SentenceSegmenter {
 public:
  SentenceSegmenter(const Sentence &sentence, const SegmentOptions &options)
      : options_(options) {
    for (const Clause *c : ClausesInOrder(sentence)) {
      ordered_.push_back(c);
      by_id_.emplace(c->id, c);
    }
    for (const Clause *c : ordered_) ResolveUnit(c);
  }

  void Emit(std::vector<CenteringUnit> &out) const {
    for (const Clause *c : ordered_) {
      auto it = unit_of_.find(c->id);
      if (it == unit_of_.end() || it->second != c) continue;
      CenteringUnit unit;
      unit.id = c->id;
      unit.verbal_complex = c->verbal_complex;
      unit.position = static_cast<int>(out.size());
      Collect(c, c, unit);
      out.push_back(std::move(unit));
    }
  }

 private:
  // Maps a clause to the head clause of its unit, or nullptr if dropped.
  const Clause *ResolveUnit(const Clause *c) {
    if (auto it = unit_of_.find(c->id); it != unit_of_.end()) return it->second;
    if (!visiting_.insert(c->id).second) {
      throw ReferenceError("attachment cycle at clause \"" + c->id + "\"", c->id);
    }
    const Clause *head = nullptr;
    switch (DispositionOf(c->kind, options_)) {
      case Disposition::kHead:
        head = c;
        break;
      case Disposition::kDrop:
        head = nullptr;
        break;
      case Disposition::kMerge: {
        const Clause *parent = Parent(c);
        if (parent == nullptr) {
          head = c;
        } else {
          head = ResolveUnit(parent);
          if (head == nullptr) head = c;  // host dropped
        }
        break;
      }
    }
    visiting_.erase(c->id);
    unit_of_[c->id] = head;
    return head;
  }

  const Clause *Parent(const Clause *c) const {
    if (!c->attach_to.has_value()) return nullptr;
    auto it = by_id_.find(*c->attach_to);
    if (it == by_id_.end()) {
      throw ReferenceError("clause \"" + c->id + "\" attaches to undeclared \"" +
                               *c->attach_to + "\"",
                           *c->attach_to);
    }
    return it->second;
  }

  void Collect(const Clause *node, const Clause *head, CenteringUnit &unit) const {
    unit.source_clauses.push_back(node->id);
    std::vector<const Mention *> mentions;
    for (const Mention &m : node->mentions) mentions.push_back(&m);
    std::stable_sort(mentions.begin(), mentions.end(),
                     [](const Mention *a, const Mention *b) {
                       return a->surface_pos < b->surface_pos;
                     });
    for (const Mention *m : mentions) {
      if (node == head && m->role == Role::kSubject && !unit.head_subject) {
        unit.head_subject = unit.mentions.size();
      }
      unit.mentions.push_back(*m);
    }
    if (node->other_construction) unit.other_construction = true;

    // Tenseless adjuncts first, then complements.
    for (ClauseKind kind : {ClauseKind::kTenselessAdjunct, ClauseKind::kComplement}) {
      for (const Clause *child : ordered_) {
        if (child == node || child->kind != kind) continue;
        if (!child->attach_to.has_value() || *child->attach_to != node->id) continue;
        if (child == unit_of_.at(child->id)) continue;  // heads its own unit
        if (unit_of_.at(child->id) != head) continue;
        Collect(child, head, unit);
      }
    }
  }

  const SegmentOptions &options_;
  std::vector<const Clause *> ordered_;
  std::map<std::string, const Clause *> by_id_;
  std::map<std::string, const Clause *> unit_of_;
  std::set<std::string> visiting_;
};

}  // namespace

std::vector<CenteringUnit> Segment(const Document &doc,
                                   const SegmentOptions &options) {
  std::vector<CenteringUnit> units;
  for (const Sentence &s : doc.sentences) {
    SentenceSegmenter(s, options).Emit(units);
  }
  return units;
}

size_t UnitCount(const Document &doc, const SegmentOptions &options) {
  return Segment(doc, options).size();
}

}  // namespace centering
