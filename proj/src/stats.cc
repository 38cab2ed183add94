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

#include "centering/stats.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include "centering/corpus.h"
#include "json.hpp"

namespace centering {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Critical values of chi-square with one degree of freedom.
struct Critical {
  double value;
  double p;
};
constexpr std::array<Critical, 6> kCriticalValues = {{
    {10.828, 0.001},
    {6.635, 0.01},
    {3.841, 0.05},
    {2.706, 0.1},
    {0.455, 0.5},
    {0.148, 0.7},
}};

constexpr std::array<std::string_view, kTransitionColumns> kTransitionLabels = {
    "CONTINUE", "RETAIN", "SHIFT", "CENT-EST", "OTHER"};

std::optional<TransitionColumn> ColumnOf(Transition t) {
  switch (t) {
    case Transition::kContinue:
      return TransitionColumn::kContinue;
    case Transition::kRetain:
      return TransitionColumn::kRetain;
    case Transition::kSmoothShift:
    case Transition::kRoughShift:
      return TransitionColumn::kShift;
    case Transition::kCentEst:
      return TransitionColumn::kCentEst;
    case Transition::kOther:
      return TransitionColumn::kOther;
    case Transition::kFirst:
      return std::nullopt;
  }
  return std::nullopt;
}

void Count(FormCounts &row, const Observation &o) {
  std::optional<TransitionColumn> column = ColumnOf(o.transition);
  if (!column.has_value()) return;
  row.transitions[static_cast<size_t>(*column)] += o.count;
  if (*column == TransitionColumn::kContinue) {
    BigramColumn b = o.bigram == Bigram::kRetCont ? BigramColumn::kRetCont
                                                  : BigramColumn::kContOrShiftCont;
    row.bigrams[static_cast<size_t>(b)] += o.count;
  }
}

size_t RowIndex(MentionForm form) {
  return form == MentionForm::kNullSubject ? 0 : 1;
}

// A rendered table: string cells plus an optional chi-square line.
struct Table {
  std::string key;
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::optional<std::string> note;
  std::optional<ChiSquareResult> chi2;
};

bool IsInteger(const std::string &s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
    return ch >= '0' && ch <= '9';
  });
}

std::vector<std::string> CountCells(const FormCounts &row) {
  std::vector<std::string> cells{std::to_string(row.Total())};
  for (int n : row.transitions) cells.push_back(std::to_string(n));
  return cells;
}

FormCounts Sum(const FormCounts &x, const FormCounts &y) {
  FormCounts s;
  for (size_t i = 0; i < kTransitionColumns; ++i) s.transitions[i] = x.transitions[i] + y.transitions[i];
  for (size_t i = 0; i < kBigramColumns; ++i) s.bigrams[i] = x.bigrams[i] + y.bigrams[i];
  return s;
}

std::vector<Table> BuildTables(const DistributionTable &dist) {
  const bool empty = dist.GrandTotal() == 0;
  std::vector<Table> tables;

  Table transitions{"transitions", "Distribution of centering transitions", {"Type", "Total"}, {}, {}, {}};
  for (auto label : kTransitionLabels) transitions.header.emplace_back(label);
  Table per_text{"transitions_per_text", "Distribution of centering transitions per text",
                 {"Text", "Type", "Total"}, {}, {}, {}};
  for (auto label : kTransitionLabels) per_text.header.emplace_back(label);
  Table bigrams{"ret_cont", "Pronoun occurrences for RET-CONT",
                {"Type", "Total", "CONT-CONT+SHIFT-CONT", "RET-CONT"}, {}, {}, {}};

  if (!empty) {
    const FormCounts &zero = dist.row(PronounRow::kZero);
    const FormCounts &strong = dist.row(PronounRow::kStrong);
    const FormCounts total = Sum(zero, strong);
    for (const auto &[label, row] : {std::pair<std::string, const FormCounts *>{"zero", &zero},
                                     {"strong", &strong},
                                     {"Total", &total}}) {
      std::vector<std::string> cells{label};
      for (auto &cell : CountCells(*row)) cells.push_back(cell);
      transitions.rows.push_back(cells);
      bigrams.rows.push_back({label, std::to_string((*row)[TransitionColumn::kContinue]),
                              std::to_string((*row)[BigramColumn::kContOrShiftCont]),
                              std::to_string((*row)[BigramColumn::kRetCont])});
    }
    for (const auto &[text, rows] : dist.per_text) {
      for (const auto &[label, row] : {std::pair<std::string, const FormCounts *>{"null", &rows[0]},
                                       {"strong", &rows[1]}}) {
        std::vector<std::string> cells{text, label};
        for (auto &cell : CountCells(*row)) cells.push_back(cell);
        per_text.rows.push_back(cells);
      }
    }
    std::vector<std::string> cells{"Total", ""};
    for (auto &cell : CountCells(total)) cells.push_back(cell);
    per_text.rows.push_back(cells);
  }
  tables.push_back(std::move(transitions));
  tables.push_back(std::move(per_text));
  tables.push_back(std::move(bigrams));

  for (const NamedContingency &nc : ContingencyTables(dist)) {
    Table t{nc.key, nc.title, {"", nc.columns[0], nc.columns[1]}, {}, {}, {}};
    if (!empty) {
      t.rows.push_back({"zero", std::to_string(nc.table.a), std::to_string(nc.table.b)});
      t.rows.push_back({"strong", std::to_string(nc.table.c), std::to_string(nc.table.d)});
      try {
        t.chi2 = ChiSquare(nc.table);
        t.note = t.chi2->ToString();
      } catch (const DegenerateTableError &) {
        t.note = "chi2=undefined (zero margin)";
      }
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

std::string RenderText(const std::vector<Table> &tables) {
  std::ostringstream out;
  bool first = true;
  for (const Table &t : tables) {
    if (!first) out << "\n";
    first = false;
    out << t.title << "\n";
    size_t n = t.header.size();
    std::vector<size_t> width(n, 0);
    std::vector<bool> numeric(n, true);
    for (size_t i = 0; i < n; ++i) width[i] = t.header[i].size();
    for (const auto &row : t.rows) {
      for (size_t i = 0; i < n; ++i) {
        width[i] = std::max(width[i], row[i].size());
        if (!IsInteger(row[i])) numeric[i] = false;
      }
    }
    if (t.rows.empty()) std::fill(numeric.begin(), numeric.end(), false);
    auto line = [&](const std::vector<std::string> &cells) {
      std::string s;
      for (size_t i = 0; i < n; ++i) {
        if (i > 0) s += "  ";
        std::string pad(width[i] - cells[i].size(), ' ');
        s += numeric[i] ? pad + cells[i] : cells[i] + pad;
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      out << s << "\n";
    };
    line(t.header);
    std::vector<std::string> rule;
    for (size_t i = 0; i < n; ++i) rule.emplace_back(width[i], '-');
    line(rule);
    for (const auto &row : t.rows) line(row);
    if (t.note.has_value()) out << *t.note << "\n";
  }
  return out.str();
}

std::string RenderTsv(const std::vector<Table> &tables) {
  std::ostringstream out;
  bool first = true;
  auto line = [&out](const std::vector<std::string> &cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out << '\t';
      out << cells[i];
    }
    out << '\n';
  };
  for (const Table &t : tables) {
    if (!first) out << "\n";
    first = false;
    out << "# " << t.title << "\n";
    line(t.header);
    for (const auto &row : t.rows) line(row);
    if (t.note.has_value()) out << "# " << *t.note << "\n";
  }
  return out.str();
}

std::string RenderJson(const std::vector<Table> &tables) {
  ordered_json root;
  ordered_json list = ordered_json::array();
  for (const Table &t : tables) {
    ordered_json jt;
    jt["key"] = t.key;
    jt["title"] = t.title;
    jt["header"] = t.header;
    ordered_json rows = ordered_json::array();
    for (const auto &row : t.rows) {
      ordered_json jr = ordered_json::array();
      for (const auto &cell : row) {
        if (IsInteger(cell)) {
          jr.push_back(std::stol(cell));
        } else {
          jr.push_back(cell);
        }
      }
      rows.push_back(std::move(jr));
    }
    jt["rows"] = std::move(rows);
    if (t.chi2.has_value()) {
      ordered_json c;
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3f", t.chi2->statistic);
      c["statistic"] = std::stod(buf);
      c["p"] = t.chi2->Bracket();
      jt["chi2"] = std::move(c);
    } else {
      jt["chi2"] = nullptr;
    }
    list.push_back(std::move(jt));
  }
  root["tables"] = std::move(list);
  return root.dump(2) + "\n";
}

}  // namespace

int FormCounts::Total() const {
  return std::accumulate(transitions.begin(), transitions.end(), 0);
}

std::vector<Observation> Observations(const Document &doc,
                                      const SegmentOptions &options) {
  std::vector<CenteringUnit> units = Segment(doc, options);
  CenteringTracker tracker(doc);
  for (const CenteringUnit &unit : units) tracker.Step(unit);

  std::map<std::string, size_t> unit_of_mention;
  for (size_t i = 0; i < units.size(); ++i) {
    for (const Mention &m : units[i].mentions) unit_of_mention.emplace(m.id, i);
  }

  std::vector<Observation> out;
  for (const Mention &pronoun : EligiblePronouns(doc)) {
    auto it = unit_of_mention.find(pronoun.id);
    if (it == unit_of_mention.end()) continue;
    const CenteringState &state = tracker.states()[it->second];
    if (state.transition == Transition::kFirst) continue;
    out.push_back({doc.doc_id, pronoun.form, state.transition, state.bigram, 1});
  }
  return out;
}

DistributionTable Tally(std::span<const Observation> observations) {
  DistributionTable table;
  for (const Observation &o : observations) {
    size_t row = RowIndex(o.form);
    Count(table.totals[row], o);
    auto it = std::find_if(table.per_text.begin(), table.per_text.end(),
                           [&o](const auto &entry) { return entry.first == o.doc_id; });
    if (it == table.per_text.end()) {
      table.per_text.emplace_back(o.doc_id, FormRows{});
      it = std::prev(table.per_text.end());
    }
    Count(it->second[row], o);
  }
  return table;
}

DistributionTable Distribution(std::span<const Document> corpus,
                               const SegmentOptions &options) {
  std::vector<Observation> all;
  for (const Document &doc : corpus) {
    std::vector<Observation> obs = Observations(doc, options);
    all.insert(all.end(), obs.begin(), obs.end());
  }
  DistributionTable table = Tally(all);
  // Documents without eligible pronouns still get a (zero) per-text row.
  for (const Document &doc : corpus) {
    auto it = std::find_if(table.per_text.begin(), table.per_text.end(),
                           [&doc](const auto &entry) { return entry.first == doc.doc_id; });
    if (it == table.per_text.end()) table.per_text.emplace_back(doc.doc_id, FormRows{});
  }
  return table;
}

std::vector<Observation> ParseObservations(std::string_view bytes) {
  json root;
  try {
    root = json::parse(bytes.begin(), bytes.end());
  } catch (const json::exception &e) {
    throw ParseError("malformed JSON: " + std::string(e.what()), 0, 0);
  }
  auto fail = [](const std::string &path, const std::string &what) {
    throw ParseError(path + ": " + what, 0, 0);
  };
  if (!root.is_object() || root.size() != 1 || !root.contains("observations") ||
      !root["observations"].is_array()) {
    fail("", "expected {\"observations\": [...]}");
  }
  std::vector<Observation> out;
  const json &list = root["observations"];
  for (size_t i = 0; i < list.size(); ++i) {
    std::string path = "/observations/" + std::to_string(i);
    const json &o = list[i];
    if (!o.is_object()) fail(path, "expected an object");
    for (const auto &item : o.items()) {
      const std::string &k = item.key();
      if (k != "doc" && k != "form" && k != "transition" && k != "bigram" && k != "count") {
        fail(path, "unknown key \"" + k + "\"");
      }
    }
    Observation obs;
    if (!o.contains("doc") || !o["doc"].is_string()) fail(path + "/doc", "expected a string");
    obs.doc_id = o["doc"].get<std::string>();
    if (!o.contains("form") || !o["form"].is_string()) fail(path + "/form", "expected a string");
    std::optional<MentionForm> form = ParseMentionForm(o["form"].get<std::string>());
    if (!form.has_value() || !IsSubjectPronounForm(*form)) {
      fail(path + "/form", "expected \"null\" or \"strong\"");
    }
    obs.form = *form;
    if (!o.contains("transition") || !o["transition"].is_string()) {
      fail(path + "/transition", "expected a string");
    }
    std::optional<Transition> t = ParseTransition(o["transition"].get<std::string>());
    if (!t.has_value()) fail(path + "/transition", "invalid transition");
    obs.transition = *t;
    if (o.contains("bigram") && !o["bigram"].is_null()) {
      if (!o["bigram"].is_string()) fail(path + "/bigram", "expected a string or null");
      std::optional<Bigram> b = ParseBigram(o["bigram"].get<std::string>());
      if (!b.has_value()) fail(path + "/bigram", "invalid bigram");
      if (obs.transition != Transition::kContinue) {
        fail(path + "/bigram", "bigram requires transition CONTINUE");
      }
      obs.bigram = *b;
    }
    if (o.contains("count")) {
      if (!o["count"].is_number_integer() || o["count"].get<int>() < 0) {
        fail(path + "/count", "expected a nonnegative integer");
      }
      obs.count = o["count"].get<int>();
    }
    out.push_back(std::move(obs));
  }
  return out;
}

std::string ChiSquareResult::Bracket() const {
  if (p_threshold >= 1.0) return "p<=1";
  char buf[16];
  std::snprintf(buf, sizeof(buf), "p<%g", p_threshold);
  return buf;
}

std::string ChiSquareResult::ToString() const {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "chi2=%.3f %s", statistic, Bracket().c_str());
  return buf;
}

ChiSquareResult ChiSquare(const ContingencyTable &t) {
  if (t.a < 0 || t.b < 0 || t.c < 0 || t.d < 0) {
    throw DegenerateTableError("negative cell count");
  }
  const double observed[2][2] = {{double(t.a), double(t.b)}, {double(t.c), double(t.d)}};
  const double rows[2] = {double(t.a + t.b), double(t.c + t.d)};
  const double cols[2] = {double(t.a + t.c), double(t.b + t.d)};
  if (rows[0] == 0 || rows[1] == 0 || cols[0] == 0 || cols[1] == 0) {
    throw DegenerateTableError("contingency table has a zero margin");
  }
  const double n = rows[0] + rows[1];
  ChiSquareResult r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      double expected = rows[i] * cols[j] / n;
      double diff = observed[i][j] - expected;
      r.statistic += diff * diff / expected;
    }
  }
  for (const Critical &c : kCriticalValues) {
    if (r.statistic >= c.value) {
      r.p_threshold = c.p;
      break;
    }
  }
  return r;
}

std::vector<NamedContingency> ContingencyTables(const DistributionTable &table) {
  const FormCounts &zero = table.row(PronounRow::kZero);
  const FormCounts &strong = table.row(PronounRow::kStrong);
  auto others = [](const FormCounts &r) {
    return long(r.Total() - r[TransitionColumn::kContinue]);
  };
  auto cont = [](const FormCounts &r) { return long(r[TransitionColumn::kContinue]); };
  auto cc = [](const FormCounts &r) { return long(r[BigramColumn::kContOrShiftCont]); };
  auto rc = [](const FormCounts &r) { return long(r[BigramColumn::kRetCont]); };
  auto ce = [](const FormCounts &r) { return long(r[TransitionColumn::kCentEst]); };

  return {
      {"continue_vs_others",
       "CONTINUE vs. all other transitions",
       {"CONTINUE", "ALL OTHERS"},
       {cont(zero), others(zero), cont(strong), others(strong)}},
      {"contcont_vs_retcont",
       "CONT-CONT + SHIFT-CONT vs. RET-CONT",
       {"CONT-CONT+SHIFT-CONT", "RET-CONT"},
       {cc(zero), rc(zero), cc(strong), rc(strong)}},
      {"contcont_vs_others",
       "CONT-CONT + SHIFT-CONT vs. all other transitions",
       {"CONT-CONT+SHIFT-CONT", "RET-CONT+ALL OTHERS"},
       {cc(zero), rc(zero) + others(zero), cc(strong), rc(strong) + others(strong)}},
      {"retcont_vs_noncontinue",
       "RET-CONT vs. transitions different from CONTINUE",
       {"RET-CONT", "ALL OTHERS (excluding CONTINUE)"},
       {rc(zero), others(zero), rc(strong), others(strong)}},
      {"contcont_vs_centest",
       "CONT-CONT + SHIFT-CONT vs. CENT-EST",
       {"CONT-CONT+SHIFT-CONT", "CENT-EST"},
       {cc(zero), ce(zero), cc(strong), ce(strong)}},
  };
}

std::optional<TableFormat> ParseTableFormat(std::string_view s) {
  if (s == "text") return TableFormat::kText;
  if (s == "tsv") return TableFormat::kTsv;
  if (s == "json") return TableFormat::kJson;
  return std::nullopt;
}

std::string RenderTables(const DistributionTable &table, TableFormat format) {
  std::vector<Table> tables = BuildTables(table);
  switch (format) {
    case TableFormat::kTsv:
      return RenderTsv(tables);
    case TableFormat::kJson:
      return RenderJson(tables);
    case TableFormat::kText:
      break;
  }
  return RenderText(tables);
}

}  // namespace centering
