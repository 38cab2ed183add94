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

// Pronoun distribution tables and Pearson chi-square tests over them.

#ifndef CENTERING_STATS_H_
#define CENTERING_STATS_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centering/centering.h"
#include "centering/model.h"
#include "centering/segmentation.h"

namespace centering {

// Table rows.
enum class PronounRow { kZero = 0, kStrong = 1 };

// Transition columns; smooth and rough shifts share one column.
enum class TransitionColumn { kContinue = 0, kRetain, kShift, kCentEst, kOther };

// Split of the CONTINUE column. A CONTINUE with no bigram (it follows a
// FIRST, CENT_EST or OTHER) counts with CONT-CONT + SHIFT-CONT.
enum class BigramColumn { kContOrShiftCont = 0, kRetCont = 1 };

constexpr size_t kTransitionColumns = 5;
constexpr size_t kBigramColumns = 2;

// One eligible pronoun (or a batch of identical ones) with its label.
struct Observation {
  std::string doc_id;
  MentionForm form = MentionForm::kNullSubject;
  Transition transition = Transition::kContinue;
  std::optional<Bigram> bigram;
  int count = 1;

  bool operator==(const Observation &) const = default;
};

struct FormCounts {
  std::array<int, kTransitionColumns> transitions{};
  std::array<int, kBigramColumns> bigrams{};

  int Total() const;
  int operator[](TransitionColumn c) const { return transitions[static_cast<size_t>(c)]; }
  int operator[](BigramColumn c) const { return bigrams[static_cast<size_t>(c)]; }
  bool operator==(const FormCounts &) const = default;
};

using FormRows = std::array<FormCounts, 2>;  // indexed by PronounRow

struct DistributionTable {
  FormRows totals;
  // Per-text rows in order of first appearance.
  std::vector<std::pair<std::string, FormRows>> per_text;

  const FormCounts &row(PronounRow r) const { return totals[static_cast<size_t>(r)]; }
  int GrandTotal() const { return totals[0].Total() + totals[1].Total(); }
  bool operator==(const DistributionTable &) const = default;
};

// Labels every eligible pronoun of the document with its unit's
// transition. Pronouns of the first unit carry no transition and are
// skipped.
std::vector<Observation> Observations(const Document &doc,
                                      const SegmentOptions &options = {});

DistributionTable Tally(std::span<const Observation> observations);

DistributionTable Distribution(std::span<const Document> corpus,
                               const SegmentOptions &options = {});

// Reads a labeled-observation file:
//   {"observations": [{"doc", "form": "null"|"strong", "transition",
//                      "bigram": string|null, "count": int}, ...]}
// Throws ParseError.
std::vector<Observation> ParseObservations(std::string_view bytes);

// 2x2 counts, row-major: [[a, b], [c, d]].
struct ContingencyTable {
  long a = 0, b = 0, c = 0, d = 0;

  bool operator==(const ContingencyTable &) const = default;
};

// A row or column margin is zero.
class DegenerateTableError : public Error {
 public:
  using Error::Error;
};

struct ChiSquareResult {
  double statistic = 0.0;
  // Smallest threshold in {0.001, 0.01, 0.05, 0.1, 0.5, 0.7, 1} whose
  // df = 1 critical value the statistic reaches.
  double p_threshold = 1.0;

  // "p<0.01" style; the top bracket prints as "p<=1".
  std::string Bracket() const;
  // "chi2=9.204 p<0.01".
  std::string ToString() const;
};

// Pearson chi-square with one degree of freedom, no continuity correction.
// Throws DegenerateTableError when a margin is zero.
ChiSquareResult ChiSquare(const ContingencyTable &table);

struct NamedContingency {
  std::string key;
  std::string title;
  std::array<std::string, 2> columns;
  ContingencyTable table;
};

// The five zero/strong comparisons: CONTINUE vs. the rest; CONT-CONT +
// SHIFT-CONT vs. RET-CONT; CONT-CONT + SHIFT-CONT vs. everything else;
// RET-CONT vs. the non-CONTINUE transitions; CONT-CONT + SHIFT-CONT vs.
// CENT-EST.
std::vector<NamedContingency> ContingencyTables(const DistributionTable &table);

enum class TableFormat { kText, kTsv, kJson };

std::optional<TableFormat> ParseTableFormat(std::string_view s);

// Renders the distribution tables followed by the contingency tables.
// With no observations every table is rendered header-only.
std::string RenderTables(const DistributionTable &table, TableFormat format);

}  // namespace centering

#endif  // CENTERING_STATS_H_
