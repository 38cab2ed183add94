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

#include <string>
#include <vector>

#include "centering/segmentation.h"
#include "doctest.h"
#include "test_util.h"

namespace centering {
namespace {

using testing::DocBuilder;
using testing::LoadDocument;

std::vector<std::string> UnitIds(const std::vector<CenteringUnit> &units) {
  std::vector<std::string> ids;
  for (const auto &u : units) ids.push_back(u.id);
  return ids;
}

std::vector<std::string> MentionIds(const CenteringUnit &unit) {
  std::vector<std::string> ids;
  for (const auto &m : unit.mentions) ids.push_back(m.id);
  return ids;
}

TEST_CASE("preposed tensed adjunct is its own unit, before the main clause") {
  auto units = Segment(LoadDocument("fixtures/ex14.json"));
  CHECK(UnitIds(units) == std::vector<std::string>{"14.0", "14.1", "14.2"});
  CHECK(units[1].source_clauses == std::vector<std::string>{"14.1", "14.1.inf"});
  for (size_t i = 0; i < units.size(); ++i) CHECK(units[i].position == static_cast<int>(i));
}

TEST_CASE("main, conjunct and tensed adjunct each head a unit") {
  Document doc = DocBuilder()
                     .Person("a")
                     .Person("b")
                     .Sentence()
                     .Clause("c1")
                     .Name("a")
                     .Clause("c2", ClauseKind::kConjunct)
                     .Null("a")
                     .Clause("c3", ClauseKind::kTensedAdjunct, "c1")
                     .Strong("b")
                     .Build();
  auto units = Segment(doc);
  CHECK(UnitIds(units) == std::vector<std::string>{"c1", "c2", "c3"});
  CHECK(UnitCount(doc) == 3);
  for (const auto &u : units) {
    REQUIRE(u.head_subject.has_value());
    CHECK(u.mentions[*u.head_subject].role == Role::kSubject);
  }
}

TEST_CASE("tenseless adjuncts merge into their host") {
  Document doc = DocBuilder()
                     .Person("a")
                     .Person("b")
                     .Sentence()
                     .Clause("c1")
                     .Null("a")
                     .Clause("c2", ClauseKind::kTenselessAdjunct, "c1")
                     .Clitic("b", CliticPosition::kInSitu)
                     .Build();
  auto units = Segment(doc);
  REQUIRE(units.size() == 1);
  CHECK(units[0].source_clauses == std::vector<std::string>{"c1", "c2"});
  CHECK(MentionIds(units[0]) == std::vector<std::string>{"m1", "m2"});
  CHECK(*units[0].head_subject == 0);
}

TEST_CASE("complements merge unless split") {
  Document doc = DocBuilder()
                     .Person("a")
                     .Person("b")
                     .Sentence()
                     .Clause("c1")
                     .Name("a")
                     .Clause("c2", ClauseKind::kComplement, "c1")
                     .Strong("b")
                     .Build();
  auto merged = Segment(doc);
  REQUIRE(merged.size() == 1);
  CHECK(MentionIds(merged[0]) == std::vector<std::string>{"m1", "m2"});
  // The complement's subject is not the unit's subject.
  CHECK(*merged[0].head_subject == 0);

  auto split = Segment(doc, {.split_complements = true});
  CHECK(UnitIds(split) == std::vector<std::string>{"c1", "c2"});
  CHECK(UnitCount(doc, {.split_complements = true}) == 2);
}

TEST_CASE("relative and impersonal clauses are dropped with their mentions") {
  Document doc = DocBuilder()
                     .Person("a")
                     .Person("b")
                     .Sentence()
                     .Clause("c1")
                     .Name("a")
                     .Clause("rel", ClauseKind::kRelative, "c1")
                     .Null("b")
                     .Clause("imp", ClauseKind::kImpersonal)
                     .Np("b", Role::kObject)
                     .Build();
  auto units = Segment(doc);
  REQUIRE(units.size() == 1);
  CHECK(MentionIds(units[0]) == std::vector<std::string>{"m1"});
}

TEST_CASE("a merging clause whose host is dropped heads its own unit") {
  auto units = Segment(LoadDocument("fixtures/ex9.json"));
  CHECK(UnitIds(units) ==
        std::vector<std::string>{"9.0", "9.1", "9.2", "9.3", "9.4", "9.5"});
  // 9.3 is a complement of the impersonal "non e' che".
  CHECK(units[3].source_clauses == std::vector<std::string>{"9.3"});
  REQUIRE(units[3].head_subject.has_value());
  CHECK(units[3].mentions[*units[3].head_subject].entity == "irais");
}

TEST_CASE("merge order: head, then tenseless adjuncts, then complements, recursively") {
  Document doc = DocBuilder()
                     .Person("a")
                     .Person("b")
                     .Person("c")
                     .Person("d")
                     .Sentence()
                     .Clause("comp", ClauseKind::kComplement, "head")
                     .Np("b", Role::kObject)
                     .Clause("head")
                     .Order(3)
                     .Name("a")
                     .At(9)
                     .Np("c", Role::kOblique)
                     .At(2)
                     .Clause("adj", ClauseKind::kTenselessAdjunct, "head")
                     .Order(5)
                     .Np("d", Role::kObject)
                     .Clause("inner", ClauseKind::kTenselessAdjunct, "comp")
                     .Order(6)
                     .Np("a", Role::kOblique)
                     .Build();
  auto units = Segment(doc);
  REQUIRE(units.size() == 1);
  CHECK(units[0].id == "head");
  // Head mentions by surface position, then adj, then comp and its adjunct.
  CHECK(MentionIds(units[0]) == std::vector<std::string>{"m3", "m2", "m4", "m1", "m5"});
  CHECK(units[0].source_clauses ==
        std::vector<std::string>{"head", "adj", "comp", "inner"});
}

TEST_CASE("the unit carries the head clause verbal complex and construction flag") {
  Document doc = DocBuilder()
                     .Person("a")
                     .Sentence()
                     .Clause("c1")
                     .Agr(Gender::kFeminine, Number::kPlural)
                     .OtherConstruction()
                     .Null("a")
                     .Clause("c2", ClauseKind::kTenselessAdjunct, "c1")
                     .Build();
  auto units = Segment(doc);
  REQUIRE(units.size() == 1);
  CHECK(units[0].other_construction);
  CHECK(units[0].verbal_complex.agr_gender == Gender::kFeminine);
  CHECK(units[0].verbal_complex.agr_number == Number::kPlural);
}

TEST_CASE("a unit without a subject has no head_subject") {
  Document doc = DocBuilder()
                     .Thing("t")
                     .Sentence()
                     .Clause("c1")
                     .Np("t", Role::kObject)
                     .Build();
  auto units = Segment(doc);
  REQUIRE(units.size() == 1);
  CHECK_FALSE(units[0].head_subject.has_value());
}

TEST_CASE("attachment cycles and dangling hosts raise ReferenceError") {
  Document cyc = DocBuilder()
                     .Sentence()
                     .Clause("c1", ClauseKind::kTenselessAdjunct, "c2")
                     .Clause("c2", ClauseKind::kComplement, "c1")
                     .Build();
  CHECK_THROWS_AS(Segment(cyc), ReferenceError);
  Document dangling = DocBuilder()
                          .Sentence()
                          .Clause("c1", ClauseKind::kTenselessAdjunct, "nowhere")
                          .Build();
  CHECK_THROWS_AS(Segment(dangling), ReferenceError);
}

TEST_CASE("documents without sentences have no units") {
  CHECK(Segment(DocBuilder().Build()).empty());
}

}  // namespace
}  // namespace centering
