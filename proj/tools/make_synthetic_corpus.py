#!/usr/bin/env python3
# Copyright 2026 The Centering Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generates the synthetic annotated corpus under data/synthetic.

Each unit is built to realize a chosen transition: the generator picks the
subject and the other mentions so that the intended Cb and Cp come out, and
records the transition it aimed for. expected.json lists those labels, the
number of form mismatches and the zero/strong counts per transition column.
"""

import argparse
import json
import os
import random

RANK = {"subject": 1, "object2": 2, "object": 3, "oblique": 4, "other": 4}
COLUMNS = ["CONTINUE", "RETAIN", "SHIFT", "CENT_EST", "OTHER"]
WEIGHTS = [("CONTINUE", 40), ("RETAIN", 12), ("SMOOTH_SHIFT", 10),
           ("ROUGH_SHIFT", 5), ("CENT_EST", 15), ("OTHER", 5)]


def make_entities():
    people = [("anna", "fem"), ("bice", "fem"), ("carla", "fem"),
              ("dario", "masc"), ("enzo", "masc"), ("franco", "masc")]
    ents = [{"id": i, "animate": True, "gender": g, "number": "sg", "person": 3}
            for i, g in people]
    ents.append({"id": "ragazzi", "animate": True, "gender": "masc", "number": "pl",
                 "person": 3})
    for i, g in [("casa", "fem"), ("libro", "masc"), ("lettera", "fem"), ("treno", "masc")]:
        ents.append({"id": i, "animate": False, "gender": g, "number": "sg", "person": 3})
    ents.append({"id": "io", "animate": True, "gender": "unspec", "number": "sg",
                 "person": 1, "deictic": True})
    return ents


class Generator:
    def __init__(self, rng, doc_id, n_units):
        self.rng = rng
        self.doc_id = doc_id
        self.n_units = n_units
        self.entities = make_entities()
        self.by_id = {e["id"]: e for e in self.entities}
        self.ordinary = [e["id"] for e in self.entities if not e.get("deictic")]
        self.animate = [e for e in self.ordinary if self.by_id[e]["animate"]]
        self.mention_count = 0
        # Centering state as the generator intends it.
        self.prev_cf = []
        self.prev_cb = None
        self.prev_transition = None
        self.focus = {"io"}
        self.transitions = []
        self.mismatches = 0
        self.counts = {"null": [0] * 5, "strong": [0] * 5}

    # Mention helpers.
    def mention(self, entity, form, role, **kw):
        self.mention_count += 1
        m = {"id": "%s.m%d" % (self.doc_id, self.mention_count), "entity": entity,
             "form": form, "role": role}
        m.update(kw)
        return m

    def pronoun_form(self):
        return "null" if self.rng.random() < 0.7 else "strong"

    def subject(self, entity, pronoun_ok=True):
        if self.by_id[entity]["animate"] and pronoun_ok and self.rng.random() < 0.85:
            return self.mention(entity, self.pronoun_form(), "subject")
        return self.mention(entity, self.rng.choice(["name", "np"]), "subject")

    def complement(self, entity, clitic=None):
        animate = self.by_id[entity]["animate"]
        if animate and clitic is not None:
            return self.mention(entity, "clitic", self.rng.choice(["object", "object2"]),
                                clitic_position=clitic)
        if animate and self.rng.random() < 0.4:
            return self.mention(entity, "clitic", self.rng.choice(["object", "object2"]),
                                clitic_position=self.rng.choice(["climbed", "in_situ"]))
        return self.mention(entity, "np", self.rng.choice(["object", "oblique", "other"]))

    def fresh(self, exclude, count):
        pool = [e for e in self.ordinary if e not in exclude]
        self.rng.shuffle(pool)
        return pool[:count]

    # Unit construction. Returns (mentions, other_construction, intended).
    def build(self, target):
        prev_cf, prev_cb = self.prev_cf, self.prev_cb
        anchor = prev_cb if prev_cb is not None else (prev_cf[0] if prev_cf else None)
        rng = self.rng

        if self.prev_transition is None:
            subj = rng.choice(self.animate)
            ms = [self.mention(subj, "name", "subject")]
            ms += [self.complement(e) for e in self.fresh({subj}, rng.randint(0, 2))]
            return ms, False, "FIRST"

        if target == "OTHER":
            subj = rng.choice(self.ordinary)
            ms = [self.subject(subj)]
            ms += [self.complement(e) for e in self.fresh({subj}, rng.randint(0, 2))]
            return ms, True, "OTHER"

        if target == "CONTINUE" and anchor is not None:
            ms = [self.subject(anchor)]
            ms += [self.complement(e) for e in self.fresh(set(prev_cf) | {anchor},
                                                          rng.randint(0, 2))]
            return ms, False, "CONTINUE"

        if target == "RETAIN" and anchor is not None:
            lower = [e for e in prev_cf[prev_cf.index(anchor) + 1:]
                     if self.by_id[e]["animate"]]
            if lower and rng.random() < 0.8:
                subj = rng.choice(lower)
                ms = [self.subject(subj)]
            else:
                subj = self.fresh(set(prev_cf) | {anchor}, 1)
                if not subj:
                    return self.build("CENT_EST")
                subj = subj[0]
                ms = [self.mention(subj, rng.choice(["name", "np"]), "subject")]
            ms.append(self.complement(anchor))
            return ms, False, "RETAIN"

        if target in ("SMOOTH_SHIFT", "ROUGH_SHIFT") and prev_cb is not None:
            others = [e for e in prev_cf if e != prev_cb]
            if not others:
                return self.build("CONTINUE")
            y = rng.choice(others)
            if target == "SMOOTH_SHIFT":
                ms = [self.subject(y)]
                ms += [self.complement(e) for e in self.fresh(set(prev_cf), rng.randint(0, 1))]
            else:
                # A full subject from outside the previous Cf outranks y.
                z = self.fresh(set(prev_cf), 1)
                if not z:
                    return self.build("CONTINUE")
                ms = [self.mention(z[0], rng.choice(["name", "np"]), "subject"),
                      self.complement(y)]
            return ms, False, target

        if target == "CENT_EST":
            candidates = [e for e in self.animate if e in self.focus and e not in prev_cf]
            if candidates and rng.random() < 0.8:
                p = rng.choice(candidates)
                ms = [self.mention(p, self.pronoun_form(), "subject")]
                ms += [self.complement(e) for e in self.fresh({p}, rng.randint(0, 2))]
            else:
                subj = self.fresh(set(prev_cf), 1)
                if not subj:
                    return self.build("CONTINUE")
                ms = [self.mention(subj[0], rng.choice(["name", "np"]), "subject")]
                ms += [self.complement(e)
                       for e in self.fresh(set(prev_cf) | {subj[0]}, rng.randint(0, 1))]
            return ms, False, "CENT_EST"

        return self.build("CENT_EST")

    def rank(self, ms):
        order = sorted(range(len(ms)), key=lambda i: RANK[ms[i]["role"]])
        cf = []
        for i in order:
            e = ms[i]["entity"]
            if not self.by_id[e].get("deictic") and e not in cf:
                cf.append(e)
        return cf

    def compatible_early(self, entity, agr_gender, agr_number, ms):
        e = self.by_id[entity]
        if agr_gender != "unspec" and e["gender"] != "unspec" and agr_gender != e["gender"]:
            return False
        if agr_number != "unspec" and e["number"] != "unspec" and agr_number != e["number"]:
            return False
        return not any(m["entity"] == entity and m.get("clitic_position") == "climbed"
                       for m in ms)

    def account(self, transition, subj, agr, ms, eligible):
        """Records the observation and the audit outcome of the unit's subject."""
        if not eligible or transition == "FIRST":
            return
        column = COLUMNS.index("SHIFT" if transition.endswith("SHIFT") else transition)
        form = subj["form"]
        self.counts[form][column] += 1
        predicted = "either"
        if transition == "CONTINUE":
            predicted = "either" if self.prev_transition == "RETAIN" else "null"
        elif transition in ("RETAIN", "SMOOTH_SHIFT", "ROUGH_SHIFT"):
            if self.prev_cb is not None and not self.compatible_early(
                    self.prev_cb, agr[0], agr[1], ms):
                predicted = "null"
            else:
                predicted = "strong"
        if predicted != "either" and (predicted == "null") != (form == "null"):
            self.mismatches += 1

    def unit(self, sentence_id, index, kind, attach_to, order):
        rng = self.rng
        r = rng.random() * sum(w for _, w in WEIGHTS)
        target = WEIGHTS[-1][0]
        for name, w in WEIGHTS:
            if r < w:
                target = name
                break
            r -= w
        ms, other, transition = self.build(target)
        ms.extend(self.extras(ms))

        subj = ms[0]
        e = self.by_id[subj["entity"]]
        agr = (rng.choice([e["gender"], "unspec"]), rng.choice([e["number"], "unspec"]))
        constrained = (kind == "conjunct" and transition == "CONTINUE"
                       and subj["form"] == "null" and rng.random() < 0.3)
        if constrained:
            subj["constrained"] = True
        eligible = (subj["form"] in ("null", "strong") and e["animate"]
                    and not constrained)

        cf = self.rank(ms)
        cb = None
        if self.prev_transition is not None:
            realized = {m["entity"] for m in ms}
            if self.prev_cb in realized:
                cb = self.prev_cb
            else:
                cb = next((x for x in self.prev_cf if x in realized), None)
        self.account(transition, subj, agr, ms, eligible)

        # Head mentions stay in the clause; some complements move to a
        # tenseless adjunct, which is merged back after the head mentions.
        clause_id = "%s.%d" % (sentence_id, index)
        head, lower = [ms[0]], []
        for m in ms[1:]:
            (lower if lower or rng.random() < 0.25 else head).append(m)
        for pos, m in enumerate(head + lower):
            m["surface_pos"] = pos * 2
        clauses = [{"id": clause_id, "kind": kind, "order": order,
                    "other_construction": other,
                    "verbal_complex": {"tensed": True, "agr_gender": agr[0],
                                       "agr_number": agr[1]},
                    "mentions": head}]
        if attach_to is not None:
            clauses[0]["attach_to"] = attach_to
        if lower:
            clauses.append({"id": clause_id + ".inf", "kind": "tenseless_adjunct",
                            "attach_to": clause_id, "order": order + 1,
                            "verbal_complex": {"tensed": False, "agr_gender": "unspec",
                                               "agr_number": "unspec"},
                            "mentions": lower})

        self.transitions.append({"unit": clause_id, "transition": transition,
                                 "cf": cf, "cb": cb})
        self.prev_cf, self.prev_cb, self.prev_transition = cf, cb, transition
        self.focus.update(m["entity"] for m in ms)
        return clauses

    def extras(self, ms):
        # An occasional deictic oblique; it never enters the Cf list.
        if self.rng.random() < 0.15 and all(m["entity"] != "io" for m in ms):
            return [self.mention("io", "strong", "oblique")]
        return []

    def document(self):
        sentences = []
        made = 0
        while made < self.n_units:
            sid = "%s.s%d" % (self.doc_id, len(sentences) + 1)
            k = min(self.rng.choice([1, 1, 1, 2, 2, 3]), self.n_units - made)
            clauses = []
            order = 0
            for i in range(k):
                if i == 0:
                    kind, attach = "main", None
                else:
                    kind = self.rng.choice(["conjunct", "tensed_adjunct"])
                    attach = "%s.0" % sid if kind == "tensed_adjunct" else None
                produced = self.unit(sid, i, kind, attach, order)
                clauses.extend(produced)
                order += len(produced)
            if self.rng.random() < 0.2:
                # Relative clauses are not units; their mentions do not count.
                host = self.rng.choice([c for c in clauses if c["kind"] != "tenseless_adjunct"])
                clauses.append({"id": sid + ".rel", "kind": "relative",
                                "attach_to": host["id"], "order": order,
                                "verbal_complex": {"tensed": True, "agr_gender": "unspec",
                                                   "agr_number": "unspec"},
                                "mentions": [self.mention(self.rng.choice(self.animate),
                                                          "null", "subject",
                                                          surface_pos=40)]})
            sentences.append({"id": sid, "clauses": clauses})
            made += k
        return {"doc_id": self.doc_id, "entities": self.entities, "sentences": sentences}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..",
                                                      "data", "synthetic"))
    parser.add_argument("--seed", type=int, default=4242)
    parser.add_argument("--docs", type=int, default=8)
    parser.add_argument("--units", type=int, default=25)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    os.makedirs(args.out, exist_ok=True)
    expected = {"documents": [], "totals": {"null": [0] * 5, "strong": [0] * 5}}
    for d in range(args.docs):
        doc_id = "synth%02d" % (d + 1)
        gen = Generator(rng, doc_id, args.units)
        doc = gen.document()
        with open(os.path.join(args.out, doc_id + ".json"), "w") as f:
            json.dump(doc, f, indent=2)
            f.write("\n")
        expected["documents"].append({"doc_id": doc_id, "file": doc_id + ".json",
                                      "units": gen.transitions,
                                      "mismatches": gen.mismatches})
        for form in ("null", "strong"):
            for i in range(5):
                expected["totals"][form][i] += gen.counts[form][i]
    with open(os.path.join(args.out, "expected.json"), "w") as f:
        json.dump(expected, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()
