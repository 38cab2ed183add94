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

// Reading, writing and checking annotated discourse documents.

#ifndef CENTERING_CORPUS_H_
#define CENTERING_CORPUS_H_

#include <string>
#include <string_view>
#include <vector>

#include "centering/model.h"

namespace centering {

// Parses one document from UTF-8 JSON text. Throws ParseError on malformed
// syntax or schema violations (unknown keys, wrong types, bad enum values),
// ReferenceError on undeclared entity/clause ids and DuplicateError on
// repeated ids.
Document ParseDocument(std::string_view bytes);

// Serializes with keys in the canonical order, two-space indentation and a
// trailing newline. ParseDocument(SerializeDocument(d)) == d.
std::string SerializeDocument(const Document &doc);

// One broken invariant.
struct Violation {
  std::string id;         // offending entity, mention or clause id
  std::string invariant;  // stable code, e.g. "clause.single_subject"
  std::string message;

  bool operator==(const Violation &) const = default;
};

// Checks every type invariant; an empty result means the document is valid.
//
// Invariant codes:
//   entity.members          members nonempty iff is_set
//   entity.member_resolves  member ids name declared entities
//   entity.member_cycle     set membership is acyclic
//   entity.deictic_person   deictic iff person 1 or 2
//   mention.entity_resolves mention entity is declared
//   mention.clitic_position clitic position set iff form is a clitic
//   mention.possessor       possessor differs from entity and is declared
//   clause.single_subject   at most one subject mention per clause
//   clause.attach_to        attach_to present iff the kind needs a host
//   clause.attach_resolves  attach_to names a clause in the same sentence
//   clause.attach_cycle     attachment is acyclic
//   clause.order_unique     clause order values unique within a sentence
//   verbal_complex.untensed untensed complexes carry no agreement
//   document.unique_id      ids are unique per namespace
std::vector<Violation> ValidateDocument(const Document &doc);

// Third person animate pronominal subjects (null or strong) that are not
// syntactically constrained and not inside impersonal or relative clauses,
// in document order (sentence order, then clause order, then surface
// position).
std::vector<Mention> EligiblePronouns(const Document &doc);

// Eligibility test for a single subject mention.
bool IsEligiblePronoun(const Document &doc, const Clause &clause,
                       const Mention &mention);

// Clauses of a sentence sorted by their surface order.
std::vector<const Clause *> ClausesInOrder(const Sentence &sentence);

}  // namespace centering

#endif  // CENTERING_CORPUS_H_
