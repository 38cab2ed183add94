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

#ifndef CENTERING_SEGMENTATION_H_
#define CENTERING_SEGMENTATION_H_

#include <optional>
#include <string>
#include <vector>

#include "centering/model.h"

namespace centering {

struct SegmentOptions {
  // Give tensed complements their own unit instead of merging them into
  // the matrix clause's unit.
  bool split_complements = false;
};

// The stretch of text over which Cb, Cf and Cp are computed.
struct CenteringUnit {
  std::string id;                           // id of the head clause
  std::vector<std::string> source_clauses;  // head first
  std::vector<Mention> mentions;
  VerbalComplex verbal_complex;             // of the head clause
  bool other_construction = false;
  int position = 0;
  // Index into mentions of the head clause's subject, if any.
  std::optional<size_t> head_subject;

  bool operator==(const CenteringUnit &) const = default;
};

// Flattens a document into its linear sequence of centering units.
//
// Main clauses, conjuncts and tensed adjuncts head units. Tenseless
// adjuncts join their host's unit; complements do too unless
// split_complements is set. Relative and impersonal clauses are dropped
// along with their mentions. A merging clause whose host is dropped heads
// its own unit. Units of a sentence follow the surface order of their head
// clauses, so a preposed adjunct precedes its matrix clause.
//
// Within a unit, the head clause's mentions come first (by surface
// position), then merged tenseless adjuncts, then merged complements, each
// recursively and in clause order.
//
// Throws ReferenceError on a dangling or cyclic attach_to.
std::vector<CenteringUnit> Segment(const Document &doc,
                                   const SegmentOptions &options = {});

size_t UnitCount(const Document &doc, const SegmentOptions &options = {});

}  // namespace centering

#endif  // CENTERING_SEGMENTATION_H_
