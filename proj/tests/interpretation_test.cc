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

#include "centering/interpretation.h"
#include "doctest.h"
#include "fixture_suite.h"
#include "test_util.h"

namespace centering {
namespace {

using testing::DocBuilder;
using testing::LoadDocument;

struct Prepared {
  Document doc;
  std::vector<CenteringUnit> units;
  std::vector<CenteringState> states;
};

Prepared Prepare(Document doc) {
  Prepared p{std::move(doc), {}, {}};
  p.units = Segment(p.doc);
  p.states = Analyze(p.doc);
  return p;
}

Resolution ResolveAt(const Prepared &p, const std::string &unit) {
  for (size_t i = 1; i < p.units.size(); ++i) {
    if (p.units[i].id == unit) {
      return ResolveNullSubject(p.doc, p.units[i], p.states[i - 1],
                                ExtractClues(p.units[i]));
    }
  }
  FAIL("no unit " << unit);
  return {};
}

TEST_CASE("clues: climbed clitics are early, in-situ ones late") {
  Document doc = DocBuilder()
                     .Person("a")
                     .Person("b")
                     .Person("c")
                     .Sentence()
                     .Clause("c1")
                     .Agr(Gender::kFeminine, Number::kSingular)
                     .Null("a")
                     .Clitic("b", CliticPosition::kClimbed)
                     .Clause("c2", ClauseKind::kTenselessAdjunct, "c1")
                     .Clitic("c", CliticPosition::kInSitu)
                     .Clitic("b", CliticPosition::kInSitu)
                     .Build();
  ClueSet clues = ExtractClues(Segment(doc)[0]);
  CHECK(clues.agr_gender == Gender::kFeminine);
  CHECK(clues.agr_number == Number::kSingular);
  CHECK(clues.climbed_clitics == std::vector<EntityId>{"b"});
  // b was already seen early.
  CHECK(clues.late_clitics == std::vector<EntityId>{"c"});
}

TEST_CASE("early compatibility") {
  Document doc = DocBuilder()
                     .Person("maria", Gender::kFeminine)
                     .Person("giorgio", Gender::kMasculine)
                     .Person("loro", Gender::kUnspecified, Number::kPlural)
                     .Build();
  ClueSet clues;
  CHECK(CompatibleEarly(doc, clues, "maria"));
  clues.agr_gender = Gender::kMasculine;
  CHECK_FALSE(CompatibleEarly(doc, clues, "maria"));
  CHECK(CompatibleEarly(doc, clues, "giorgio"));
  CHECK(CompatibleEarly(doc, clues, "loro"));
  clues.agr_number = Number::kSingular;
  CHECK_FALSE(CompatibleEarly(doc, clues, "loro"));
  clues.climbed_clitics = {"giorgio"};
  CHECK_FALSE(CompatibleEarly(doc, clues, "giorgio"));
  CHECK_FALSE(CompatibleEarly(doc, clues, "nobody"));
}

TEST_CASE("ex5_i: the null subject is Maria") {
  Prepared p = Prepare(LoadDocument("fixtures/ex5_i.json"));
  Resolution r = ResolveAt(p, "5c");
  CHECK(r.referent == "maria");
  CHECK_FALSE(r.default_was_overridden);
  CHECK_FALSE(r.garden_path);
}

TEST_CASE("ex5_iv: masculine agreement picks Giovanni") {
  Prepared p = Prepare(LoadDocument("fixtures/ex5_iv.json"));
  Resolution r = ResolveAt(p, "5c");
  CHECK(r.referent == "giovanni");
  CHECK(r.default_was_overridden);
  CHECK_FALSE(r.garden_path);
}

TEST_CASE("ex8_iii: the climbed clitic picks Giorgio early") {
  Prepared p = Prepare(LoadDocument("fixtures/ex8_iii.json"));
  Resolution r = ResolveAt(p, "8c");
  CHECK(r.referent == "giorgio");
  CHECK_FALSE(r.garden_path);
}

TEST_CASE("ex8_ii: the late clitic causes a garden path") {
  Prepared p = Prepare(LoadDocument("fixtures/ex8_ii.json"));
  Resolution r = ResolveAt(p, "8c");
  CHECK(r.referent == "giorgio");
  CHECK(r.garden_path);
  CHECK(r.default_was_overridden);
}

TEST_CASE("ex8_i: a late clitic for someone else changes nothing") {
  Prepared p = Prepare(LoadDocument("fixtures/ex8_i.json"));
  Resolution r = ResolveAt(p, "8c");
  CHECK(r.referent == "maria");
  CHECK_FALSE(r.garden_path);
}

TEST_CASE("expected resolutions of every fixture") {
  for (const auto &f : testing::LoadFixtures()) {
    SUBCASE(f.name.c_str()) {
      for (const std::string &failure : testing::CheckResolutions(f)) FAIL_CHECK(failure);
    }
  }
}

TEST_CASE("resolution failures") {
  Document doc = DocBuilder()
                     .Person("maria", Gender::kFeminine)
                     .Person("giorgio", Gender::kMasculine)
                     .Thing("t")
                     .Sentence()
                     .Clause("u1")
                     .Name("maria")
                     .Clause("u2", ClauseKind::kConjunct)
                     .Agr(Gender::kMasculine)
                     .Null("giorgio")
                     .Clause("u3", ClauseKind::kConjunct)
                     .Name("giorgio")
                     .Build();
  Prepared p = Prepare(doc);
  // Only Maria is available and the verb is masculine.
  CHECK_THROWS_AS(ResolveAt(p, "u2"), UnresolvedError);
  // No null subject to resolve.
  CHECK_THROWS_AS(ResolveAt(p, "u3"), Error);

  CenteringState empty;
  CHECK_THROWS_AS(ResolveNullSubject(p.doc, p.units[1], empty, ExtractClues(p.units[1])),
                  Error);
}

TEST_CASE("a late clitic alone cannot rule out every candidate") {
  Document doc = DocBuilder()
                     .Person("maria", Gender::kFeminine)
                     .Sentence()
                     .Clause("u1")
                     .Name("maria")
                     .Clause("u2", ClauseKind::kConjunct)
                     .Null("maria")
                     .Clause("u2.inf", ClauseKind::kTenselessAdjunct, "u2")
                     .Clitic("maria", CliticPosition::kInSitu)
                     .Build();
  CHECK_THROWS_AS(ResolveAt(Prepare(doc), "u2"), UnresolvedError);
}

TEST_CASE("form predictions") {
  Document doc = DocBuilder()
                     .Person("maria", Gender::kFeminine)
                     .Person("giorgio", Gender::kMasculine)
                     .Build();
  CenteringState prev;
  prev.cf = {"maria", "giorgio"};
  prev.cb = "maria";
  ClueSet none;
  ClueSet masc;
  masc.agr_gender = Gender::kMasculine;
  ClueSet climbed;
  climbed.climbed_clitics = {"maria"};

  CHECK(PredictForm(doc, Transition::kContinue, std::nullopt, none, prev) ==
        FormPrediction::kNullSubject);
  CHECK(PredictForm(doc, Transition::kContinue, Bigram::kContCont, none, prev) ==
        FormPrediction::kNullSubject);
  CHECK(PredictForm(doc, Transition::kContinue, Bigram::kRetCont, none, prev) ==
        FormPrediction::kEither);
  for (Transition t : {Transition::kRetain, Transition::kSmoothShift, Transition::kRoughShift}) {
    CHECK(PredictForm(doc, t, std::nullopt, none, prev) == FormPrediction::kStrongPronoun);
    CHECK(PredictForm(doc, t, std::nullopt, masc, prev) == FormPrediction::kNullSubject);
    CHECK(PredictForm(doc, t, std::nullopt, climbed, prev) == FormPrediction::kNullSubject);
  }
  for (Transition t : {Transition::kFirst, Transition::kCentEst, Transition::kOther}) {
    CHECK(PredictForm(doc, t, std::nullopt, masc, prev) == FormPrediction::kEither);
  }
  CenteringState no_cb = prev;
  no_cb.cb.reset();
  CHECK(PredictForm(doc, Transition::kRetain, std::nullopt, masc, no_cb) ==
        FormPrediction::kStrongPronoun);
}

TEST_CASE("audit of ex8_ii reports the garden-path null subject") {
  auto records = Audit(LoadDocument("fixtures/ex8_ii.json"));
  REQUIRE(records.size() == 1);
  const AuditRecord &r = records[0];
  CHECK(r.mention == "8c.m1");
  CHECK(r.transition == Transition::kRetain);
  CHECK(r.predicted == FormPrediction::kStrongPronoun);
  CHECK(r.actual == MentionForm::kNullSubject);
  CHECK(r.clues.late_clitics == std::vector<EntityId>{"maria"});
  CHECK(AuditRecordToJson(r) ==
        R"({"mention":"8c.m1","transition":"RETAIN","bigram":null,"predicted":"strong",)"
        R"("actual":"null","clues":{"agr_gender":"unspec","agr_number":"sg",)"
        R"("climbed":[],"late":["maria"]}})");
}

TEST_CASE("audit of ex19 flags a strong pronoun despite the early clue") {
  auto records = Audit(LoadDocument("fixtures/ex19.json"));
  REQUIRE(records.size() == 1);
  CHECK(records[0].predicted == FormPrediction::kNullSubject);
  CHECK(records[0].actual == MentionForm::kStrongPronoun);
  CHECK(records[0].clues.climbed_clitics == std::vector<EntityId>{"ospite"});
}

TEST_CASE("audit ignores the first unit and 'either' predictions") {
  CHECK(Audit(LoadDocument("fixtures/ex9.json")).empty());
  CHECK(Audit(LoadDocument("fixtures/ex14.json")).empty());
  Document doc = DocBuilder()
                     .Person("a")
                     .Sentence()
                     .Clause("u1")
                     .Strong("a")
                     .Build();
  CHECK(Audit(doc).empty());
}

}  // namespace
}  // namespace centering
