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

#include "centering/corpus.h"

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <utility>

#include "json.hpp"

namespace centering {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Converts a byte offset into a 1-based line and column.
std::pair<int, int> LineColumn(std::string_view text, size_t offset) {
  int line = 1;
  int column = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void SchemaError(const std::string &path,
                              const std::string &what) {
  // The document root has the empty JSON pointer; show it as "/".
  throw ParseError((path.empty() ? "/" : path) + ": " + what, 0, 0);
}

// Reads the fields of one JSON object, rejecting keys it was not asked for.
class ObjectReader {
 public:
  ObjectReader(const json &value, std::string path,
               std::initializer_list<std::string_view> keys)
      : value_(value), path_(std::move(path)) {
    if (!value_.is_object()) SchemaError(path_, "expected an object");
    for (const auto &item : value_.items()) {
      if (std::find(keys.begin(), keys.end(), item.key()) == keys.end()) {
        SchemaError(path_, "unknown key \"" + item.key() + "\"");
      }
    }
  }

  const std::string &path() const { return path_; }

  bool Has(const char *key) const {
    auto it = value_.find(key);
    return it != value_.end() && !it->is_null();
  }

  const json &Get(const char *key) const {
    auto it = value_.find(key);
    if (it == value_.end()) SchemaError(path_, "missing key \"" + std::string(key) + "\"");
    return *it;
  }

  std::string String(const char *key) const {
    const json &v = Get(key);
    if (!v.is_string()) SchemaError(Sub(key), "expected a string");
    return v.get<std::string>();
  }

  std::optional<std::string> OptionalString(const char *key) const {
    if (!Has(key)) return std::nullopt;
    return String(key);
  }

  bool Bool(const char *key, std::optional<bool> fallback = std::nullopt) const {
    if (!Has(key) && fallback.has_value()) return *fallback;
    const json &v = Get(key);
    if (!v.is_boolean()) SchemaError(Sub(key), "expected a boolean");
    return v.get<bool>();
  }

  int Int(const char *key) const {
    const json &v = Get(key);
    if (!v.is_number_integer()) SchemaError(Sub(key), "expected an integer");
    return v.get<int>();
  }

  const json &Array(const char *key, bool required = true) const {
    static const json kEmpty = json::array();
    if (!required && !Has(key)) return kEmpty;
    const json &v = Get(key);
    if (!v.is_array()) SchemaError(Sub(key), "expected an array");
    return v;
  }

  template <typename E>
  E Enum(const char *key, std::optional<E> (*parse)(std::string_view)) const {
    std::string s = String(key);
    std::optional<E> e = parse(s);
    if (!e.has_value()) SchemaError(Sub(key), "invalid value \"" + s + "\"");
    return *e;
  }

  std::string Sub(const char *key) const { return path_ + "/" + key; }

 private:
  const json &value_;
  std::string path_;
};

std::string Index(const std::string &path, size_t i) {
  return path + "/" + std::to_string(i);
}

Entity ReadEntity(const json &value, const std::string &path) {
  ObjectReader r(value, path,
                 {"id", "animate", "gender", "number", "person", "is_set",
                  "members", "deictic"});
  Entity e;
  e.id = r.String("id");
  e.animate = r.Bool("animate");
  e.gender = r.Enum<Gender>("gender", ParseGender);
  e.number = r.Enum<Number>("number", ParseNumber);
  e.person = r.Int("person");
  if (e.person < 1 || e.person > 3) {
    SchemaError(r.Sub("person"), "person must be 1, 2 or 3");
  }
  e.is_set = r.Bool("is_set", false);
  const json &members = r.Array("members", false);
  for (size_t i = 0; i < members.size(); ++i) {
    if (!members[i].is_string()) {
      SchemaError(Index(r.Sub("members"), i), "expected a string");
    }
    e.members.push_back(members[i].get<std::string>());
  }
  e.deictic = r.Bool("deictic", false);
  return e;
}

Mention ReadMention(const json &value, const std::string &path) {
  ObjectReader r(value, path,
                 {"id", "entity", "form", "role", "surface_pos", "empathy",
                  "qis_or_arb", "clitic_position", "possessor", "constrained"});
  Mention m;
  m.id = r.String("id");
  m.entity = r.String("entity");
  m.form = r.Enum<MentionForm>("form", ParseMentionForm);
  m.role = r.Enum<Role>("role", ParseRole);
  m.surface_pos = r.Int("surface_pos");
  if (m.surface_pos < 0) SchemaError(r.Sub("surface_pos"), "must be nonnegative");
  m.empathy = r.Bool("empathy", false);
  m.qis_or_arb = r.Bool("qis_or_arb", false);
  if (r.Has("clitic_position")) {
    m.clitic_position =
        r.Enum<CliticPosition>("clitic_position", ParseCliticPosition);
  }
  m.possessor = r.OptionalString("possessor");
  m.constrained = r.Bool("constrained", false);
  return m;
}

VerbalComplex ReadVerbalComplex(const json &value, const std::string &path) {
  ObjectReader r(value, path, {"tensed", "agr_gender", "agr_number"});
  VerbalComplex vc;
  vc.tensed = r.Bool("tensed");
  vc.agr_gender = r.Enum<Gender>("agr_gender", ParseGender);
  vc.agr_number = r.Enum<Number>("agr_number", ParseNumber);
  return vc;
}

Clause ReadClause(const json &value, const std::string &path) {
  ObjectReader r(value, path,
                 {"id", "kind", "attach_to", "order", "other_construction",
                  "verbal_complex", "mentions"});
  Clause c;
  c.id = r.String("id");
  c.kind = r.Enum<ClauseKind>("kind", ParseClauseKind);
  c.attach_to = r.OptionalString("attach_to");
  c.order = r.Int("order");
  c.other_construction = r.Bool("other_construction", false);
  c.verbal_complex = ReadVerbalComplex(r.Get("verbal_complex"),
                                       r.Sub("verbal_complex"));
  const json &mentions = r.Array("mentions");
  for (size_t i = 0; i < mentions.size(); ++i) {
    c.mentions.push_back(ReadMention(mentions[i], Index(r.Sub("mentions"), i)));
  }
  return c;
}

Sentence ReadSentence(const json &value, const std::string &path) {
  ObjectReader r(value, path, {"id", "clauses"});
  Sentence s;
  s.id = r.String("id");
  const json &clauses = r.Array("clauses");
  for (size_t i = 0; i < clauses.size(); ++i) {
    s.clauses.push_back(ReadClause(clauses[i], Index(r.Sub("clauses"), i)));
  }
  return s;
}

// Unique-id and dangling-reference checks shared by parsing (as errors)
// and validation (as violations).
struct IdCheck {
  std::vector<std::pair<std::string, std::string>> duplicates;  // id, kind
  std::vector<std::pair<std::string, std::string>> dangling;    // id, owner
};

void CheckIds(const Document &doc, IdCheck &out) {
  std::set<std::string> entity_ids;
  for (const Entity &e : doc.entities) {
    if (!entity_ids.insert(e.id).second) out.duplicates.emplace_back(e.id, "entity");
  }
  std::set<std::string> sentence_ids;
  std::set<std::string> clause_ids;
  std::set<std::string> mention_ids;
  for (const Sentence &s : doc.sentences) {
    if (!sentence_ids.insert(s.id).second) out.duplicates.emplace_back(s.id, "sentence");
    for (const Clause &c : s.clauses) {
      if (!clause_ids.insert(c.id).second) out.duplicates.emplace_back(c.id, "clause");
      for (const Mention &m : c.mentions) {
        if (!mention_ids.insert(m.id).second) out.duplicates.emplace_back(m.id, "mention");
      }
    }
  }
  for (const Entity &e : doc.entities) {
    for (const EntityId &member : e.members) {
      if (!entity_ids.count(member)) out.dangling.emplace_back(member, e.id);
    }
  }
  for (const Sentence &s : doc.sentences) {
    std::set<std::string> local;
    for (const Clause &c : s.clauses) local.insert(c.id);
    for (const Clause &c : s.clauses) {
      if (c.attach_to.has_value() && !local.count(*c.attach_to)) {
        out.dangling.emplace_back(*c.attach_to, c.id);
      }
      for (const Mention &m : c.mentions) {
        if (!entity_ids.count(m.entity)) out.dangling.emplace_back(m.entity, m.id);
        if (m.possessor.has_value() && !entity_ids.count(*m.possessor)) {
          out.dangling.emplace_back(*m.possessor, m.id);
        }
      }
    }
  }
}

ordered_json WriteEntity(const Entity &e) {
  ordered_json j;
  j["id"] = e.id;
  j["animate"] = e.animate;
  j["gender"] = ToString(e.gender);
  j["number"] = ToString(e.number);
  j["person"] = e.person;
  j["is_set"] = e.is_set;
  j["members"] = e.members;
  j["deictic"] = e.deictic;
  return j;
}

ordered_json OptionalJson(const std::optional<std::string> &value) {
  return value.has_value() ? ordered_json(*value) : ordered_json(nullptr);
}

ordered_json WriteMention(const Mention &m) {
  ordered_json j;
  j["id"] = m.id;
  j["entity"] = m.entity;
  j["form"] = ToString(m.form);
  j["role"] = ToString(m.role);
  j["surface_pos"] = m.surface_pos;
  j["empathy"] = m.empathy;
  j["qis_or_arb"] = m.qis_or_arb;
  j["clitic_position"] =
      m.clitic_position == CliticPosition::kNone
          ? ordered_json(nullptr)
          : ordered_json(ToString(m.clitic_position));
  j["possessor"] = OptionalJson(m.possessor);
  j["constrained"] = m.constrained;
  return j;
}

ordered_json WriteClause(const Clause &c) {
  ordered_json j;
  j["id"] = c.id;
  j["kind"] = ToString(c.kind);
  j["attach_to"] = OptionalJson(c.attach_to);
  j["order"] = c.order;
  j["other_construction"] = c.other_construction;
  ordered_json vc;
  vc["tensed"] = c.verbal_complex.tensed;
  vc["agr_gender"] = ToString(c.verbal_complex.agr_gender);
  vc["agr_number"] = ToString(c.verbal_complex.agr_number);
  j["verbal_complex"] = std::move(vc);
  ordered_json mentions = ordered_json::array();
  for (const Mention &m : c.mentions) mentions.push_back(WriteMention(m));
  j["mentions"] = std::move(mentions);
  return j;
}

}  // namespace

Document ParseDocument(std::string_view bytes) {
  json root;
  try {
    root = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error &e) {
    auto [line, column] = LineColumn(bytes, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON: " + std::string(e.what()), line, column);
  } catch (const json::exception &e) {
    // Out-of-range numbers and the like: well-formed but unrepresentable.
    throw ParseError("malformed JSON: " + std::string(e.what()), 0, 0);
  }

  ObjectReader r(root, "", {"doc_id", "entities", "sentences"});
  Document doc;
  doc.doc_id = r.String("doc_id");
  const json &entities = r.Array("entities");
  for (size_t i = 0; i < entities.size(); ++i) {
    doc.entities.push_back(ReadEntity(entities[i], Index("/entities", i)));
  }
  const json &sentences = r.Array("sentences");
  for (size_t i = 0; i < sentences.size(); ++i) {
    doc.sentences.push_back(ReadSentence(sentences[i], Index("/sentences", i)));
  }

  IdCheck ids;
  CheckIds(doc, ids);
  if (!ids.duplicates.empty()) {
    const auto &[id, kind] = ids.duplicates.front();
    throw DuplicateError("duplicate " + kind + " id \"" + id + "\"", id);
  }
  if (!ids.dangling.empty()) {
    const auto &[id, owner] = ids.dangling.front();
    throw ReferenceError("undeclared id \"" + id + "\" referenced by \"" +
                             owner + "\"",
                         id);
  }
  return doc;
}

std::string SerializeDocument(const Document &doc) {
  ordered_json root;
  root["doc_id"] = doc.doc_id;
  ordered_json entities = ordered_json::array();
  for (const Entity &e : doc.entities) entities.push_back(WriteEntity(e));
  root["entities"] = std::move(entities);
  ordered_json sentences = ordered_json::array();
  for (const Sentence &s : doc.sentences) {
    ordered_json js;
    js["id"] = s.id;
    ordered_json clauses = ordered_json::array();
    for (const Clause &c : s.clauses) clauses.push_back(WriteClause(c));
    js["clauses"] = std::move(clauses);
    sentences.push_back(std::move(js));
  }
  root["sentences"] = std::move(sentences);
  return root.dump(2) + "\n";
}

std::vector<Violation> ValidateDocument(const Document &doc) {
  std::vector<Violation> out;
  auto add = [&out](const std::string &id, const char *invariant,
                    std::string message) {
    out.push_back({id, invariant, std::move(message)});
  };

  IdCheck ids;
  CheckIds(doc, ids);
  for (const auto &[id, kind] : ids.duplicates) {
    add(id, "document.unique_id", "duplicate " + kind + " id");
  }

  for (const Entity &e : doc.entities) {
    if (e.is_set != !e.members.empty()) {
      add(e.id, "entity.members",
          e.is_set ? "set entity has no members" : "non-set entity has members");
    }
    for (const EntityId &member : e.members) {
      if (doc.FindEntity(member) == nullptr) {
        add(e.id, "entity.member_resolves", "undeclared member \"" + member + "\"");
      }
    }
    if (e.deictic != (e.person == 1 || e.person == 2)) {
      add(e.id, "entity.deictic_person",
          e.deictic ? "deictic entity must be first or second person"
                    : "first/second person entity must be deictic");
    }
  }

  // Membership cycles: depth-first search over the member graph.
  std::map<std::string, int> state;  // 0 unvisited, 1 on stack, 2 done
  std::set<std::string> reported;
  std::function<void(const Entity &)> visit = [&](const Entity &e) {
    state[e.id] = 1;
    for (const EntityId &member : e.members) {
      const Entity *m = doc.FindEntity(member);
      if (m == nullptr) continue;
      if (state[m->id] == 1) {
        if (reported.insert(e.id).second) {
          add(e.id, "entity.member_cycle", "set membership cycle through \"" + m->id + "\"");
        }
      } else if (state[m->id] == 0) {
        visit(*m);
      }
    }
    state[e.id] = 2;
  };
  for (const Entity &e : doc.entities) {
    if (state[e.id] == 0) visit(e);
  }

  for (const Sentence &s : doc.sentences) {
    std::map<std::string, const Clause *> by_id;
    std::set<int> orders;
    for (const Clause &c : s.clauses) by_id.emplace(c.id, &c);

    for (const Clause &c : s.clauses) {
      if (!orders.insert(c.order).second) {
        add(c.id, "clause.order_unique",
            "order " + std::to_string(c.order) + " repeated in sentence \"" + s.id + "\"");
      }
      if (IsAttachedKind(c.kind) != c.attach_to.has_value()) {
        add(c.id, "clause.attach_to",
            std::string(ToString(c.kind)) +
                (c.attach_to.has_value() ? " clause must not attach"
                                         : " clause needs attach_to"));
      }
      if (c.attach_to.has_value() && !by_id.count(*c.attach_to)) {
        add(c.id, "clause.attach_resolves",
            "attach_to \"" + *c.attach_to + "\" not in sentence \"" + s.id + "\"");
      }
      if (!c.verbal_complex.tensed &&
          (c.verbal_complex.agr_gender != Gender::kUnspecified ||
           c.verbal_complex.agr_number != Number::kUnspecified)) {
        add(c.id, "verbal_complex.untensed",
            "untensed verbal complex carries agreement features");
      }

      int subjects = 0;
      for (const Mention &m : c.mentions) {
        if (m.role == Role::kSubject) ++subjects;
        if (doc.FindEntity(m.entity) == nullptr) {
          add(m.id, "mention.entity_resolves", "undeclared entity \"" + m.entity + "\"");
        }
        bool is_clitic = m.form == MentionForm::kWeakClitic;
        if (is_clitic != (m.clitic_position != CliticPosition::kNone)) {
          add(m.id, "mention.clitic_position",
              is_clitic ? "clitic without clitic_position"
                        : "clitic_position on a non-clitic");
        }
        if (m.possessor.has_value()) {
          if (*m.possessor == m.entity) {
            add(m.id, "mention.possessor", "possessor equals the possessed entity");
          } else if (doc.FindEntity(*m.possessor) == nullptr) {
            add(m.id, "mention.possessor", "undeclared possessor \"" + *m.possessor + "\"");
          }
        }
      }
      if (subjects > 1) {
        add(c.id, "clause.single_subject",
            std::to_string(subjects) + " subject mentions");
      }
    }

    // Attachment cycles: follow attach_to until a root or a repeat.
    for (const Clause &c : s.clauses) {
      std::set<std::string> seen{c.id};
      const Clause *cur = &c;
      while (cur->attach_to.has_value()) {
        auto it = by_id.find(*cur->attach_to);
        if (it == by_id.end()) break;
        cur = it->second;
        if (cur == &c) {
          add(c.id, "clause.attach_cycle", "attachment cycle");
          break;
        }
        if (!seen.insert(cur->id).second) break;  // cycle not through c
      }
    }
  }
  return out;
}

std::vector<const Clause *> ClausesInOrder(const Sentence &sentence) {
  std::vector<const Clause *> clauses;
  for (const Clause &c : sentence.clauses) clauses.push_back(&c);
  std::stable_sort(clauses.begin(), clauses.end(),
                   [](const Clause *a, const Clause *b) { return a->order < b->order; });
  return clauses;
}

bool IsEligiblePronoun(const Document &doc, const Clause &clause,
                       const Mention &mention) {
  if (mention.role != Role::kSubject) return false;
  if (!IsSubjectPronounForm(mention.form)) return false;
  if (mention.constrained) return false;
  if (clause.kind == ClauseKind::kImpersonal || clause.kind == ClauseKind::kRelative) {
    return false;
  }
  const Entity *entity = doc.FindEntity(mention.entity);
  return entity != nullptr && entity->person == 3 && entity->animate;
}

std::vector<Mention> EligiblePronouns(const Document &doc) {
  std::vector<Mention> out;
  for (const Sentence &s : doc.sentences) {
    for (const Clause *c : ClausesInOrder(s)) {
      std::vector<const Mention *> mentions;
      for (const Mention &m : c->mentions) mentions.push_back(&m);
      std::stable_sort(mentions.begin(), mentions.end(),
                       [](const Mention *a, const Mention *b) {
                         return a->surface_pos < b->surface_pos;
                       });
      for (const Mention *m : mentions) {
        if (IsEligiblePronoun(doc, *c, *m)) out.push_back(*m);
      }
    }
  }
  return out;
}

}  // namespace centering
