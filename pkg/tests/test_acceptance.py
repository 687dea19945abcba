"""Acceptance criteria, one test each. Every test prints a PASS/FAIL line."""

import random
import time

import pytest

from starmonoid import cli
from starmonoid.enumeration import (
    GRAPH_CLASSES,
    card_formula,
    counting_identities,
    generate_class,
    predicate_monoid,
)
from starmonoid.families import expected_size, family_for
from starmonoid.generators import assignment
from starmonoid.presentation import Relation
from starmonoid.ptrans import UNDEF, PartialMap, all_partial_maps, zeta
from starmonoid.rewrite import Distinct, Proof, SearchLimits, check_proof, congruent, kb_complete
from starmonoid.stargraph import StarGraph, classify
from starmonoid.verify import (
    PRESENTED_CLASSES,
    REFUTED,
    VERIFIED,
    check_relations,
    exact_size,
    guess_and_prove,
    lemma_suite,
    rewriter_for,
    verify_presentation,
)
from starmonoid.words import Evaluator, presentation_for

from conftest import ACCEPTANCE

SEED = 20240917


def report(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE.append(line)
    print(line)
    assert ok, line


def test_1_cardinality_table():
    bad = []
    t0 = time.perf_counter()
    for n in (3, 4, 5):
        for cls in GRAPH_CLASSES + ("2PT",):
            row = (card_formula(cls, n), len(generate_class(cls, n)), len(predicate_monoid(cls, n)))
            if len(set(row)) != 1:
                bad.append((cls, n, row))
    small = time.perf_counter() - t0
    t1 = time.perf_counter()
    for cls in GRAPH_CLASSES + ("2PT",):
        row = (card_formula(cls, 6), len(generate_class(cls, 6)), len(predicate_monoid(cls, 6)))
        if len(set(row)) != 1:
            bad.append((cls, 6, row))
    big = time.perf_counter() - t1
    anchors = {c: card_formula(c, 4) for c in GRAPH_CLASSES + ("2PT",)}
    expected = {"PsEnd": 159, "PswEnd": 187, "PEnd": 213, "PwEnd": 331, "PAut": 83, "IEnd": 119, "2PT": 128}
    ok = not bad and anchors == expected and card_formula("PwEnd", 6) == 34829 and small < 60 and big < 300
    report(1, "cardinality table n=3..6", ok, f"mismatches={bad}, n<=5 {small:.1f}s, n=6 {big:.1f}s")


def test_2_relation_satisfaction():
    ps = [presentation_for(c, n) for n in (4, 5, 6) for c in PRESENTED_CLASSES]
    t0 = time.perf_counter()
    failed = [(p.name, p.n) for p in ps if check_relations(p, assignment(p.alphabet, p.n)).status != VERIFIED]
    dt = time.perf_counter() - t0
    report(2, "relations hold for R_d, R_s, R_sw, R_c, R_w, R_bar at n=4,5,6", not failed and dt < 10,
           f"failed={failed}, {dt:.1f}s")


def test_3_family_bijections():
    bad = []
    for n in (4, 5):
        ev = Evaluator(n)
        for cls, tag in (("PsEnd", "Ws"), ("PswEnd", "Wsw"), ("PEnd", "Wc"), ("PwEnd", "Ww"), ("IEnd", "WI")):
            f = family_for(cls, n)
            values = {ev(w) for w in f}
            ok = (len(values) == len(f) == expected_size(tag, n)
                  and values == generate_class(cls, n).element_set())
            if not ok:
                bad.append((tag, n))
    report(3, "canonical families biject onto their monoids at n=4,5", not bad, f"bad={bad}")


def test_4_presentations():
    t0 = time.perf_counter()
    got = {}
    for cls in PRESENTED_CLASSES:
        got[(cls, 4, "Both")] = verify_presentation(cls, 4, "Both").status
    for cls in PRESENTED_CLASSES:
        got[(cls, 5, "Both")] = verify_presentation(cls, 5, "Both").status
    dt = time.perf_counter() - t0
    bad = {k: v for k, v in got.items() if v != VERIFIED}
    report(4, "presentations verified at n=4 (Both) and n=5 (Both)", not bad and dt < 1800,
           f"not verified={bad}, {dt:.0f}s")


def test_5_lemma_suite():
    rows = lemma_suite(4, samples=20, seed=SEED)
    names = {r.name for r in rows}
    bad = [r.row() for r in rows if r.result != "Yes"]
    ev = Evaluator(4)
    sound = all(ev(r.lhs) == ev(r.rhs) for r in rows)
    ok = not bad and sound and len(rows) == 3 + 4 * 20 and len(names) == 7
    report(5, "lemma regression suite at n=4", ok, f"{len(rows)} instances, failures={bad[:2]}")


def test_6_counting_identities():
    bad = [(n, name, a, b) for n in (4, 5) for name, a, b in counting_identities(n) if a != b]
    report(6, "counting identities at n=4,5", not bad, f"bad={bad}")


def _assoc_violations(rng):
    bad = 0
    for _ in range(10_000):
        n = rng.randint(3, 6)
        f, g, h = (PartialMap(tuple(rng.randint(UNDEF, n - 1) for _ in range(n))) for _ in range(3))
        bad += (f * g) * h != f * (g * h)
    return bad


def _zeta_violations(n):
    leaf_maps = [m for m in all_partial_maps(n) if m.entries[0] == UNDEF and 0 not in m.entries]
    return sum(zeta(f * g) != zeta(f) * zeta(g) for f in leaf_maps for g in leaf_maps)


def _hasse_violations():
    return sum(not classify(StarGraph(n), f).implications_hold() for n in (3, 4, 5) for f in all_partial_maps(n))


def _normalize_violations(rng):
    bad = 0
    for cls in PRESENTED_CLASSES:
        p = presentation_for(cls, 4)
        s = kb_complete(p)
        ev = Evaluator(4)
        for _ in range(1000):
            w = tuple(rng.choice(p.alphabet) for _ in range(rng.randint(0, 20)))
            nf = s.normalize(w)
            bad += s.normalize(nf) != nf or ev(nf) != ev(w)
    return bad


def _congruent_violations(rng):
    bad = yes = 0
    for cls in ("PsEnd", "PEnd", "IEnd"):
        p = presentation_for(cls, 4)
        s = rewriter_for(p)
        ev = Evaluator(4)
        for _ in range(300):
            u = tuple(rng.choice(p.alphabet) for _ in range(rng.randint(0, 10)))
            v = tuple(rng.choice(p.alphabet) for _ in range(rng.randint(0, 10)))
            res = congruent(u, v, p, SearchLimits(max_visited=5000), rewriter=s)
            if isinstance(res, Proof):
                yes += 1
                bad += ev(u) != ev(v) or not check_proof(res, p, s.word_rules())
            elif isinstance(res, Distinct):
                bad += ev(u) == ev(v)
    return bad, yes


def test_7_structural_properties():
    rng = random.Random(SEED)
    counts = {
        "associativity": _assoc_violations(rng),
        "zeta": _zeta_violations(4) + _zeta_violations(5),
        "hasse": _hasse_violations(),
        "normalize": _normalize_violations(rng),
    }
    counts["congruent"], yes = _congruent_violations(rng)
    ok = all(v == 0 for v in counts.values()) and yes > 0
    report(7, "structural property suites", ok, f"violations={counts}, proofs checked={yes}")


def test_8_fault_injection(monkeypatch):
    flagged = {}
    # mutated relation: append a letter to the last right-hand side where that breaks it
    p = presentation_for("PsEnd", 4)
    m = generate_class("PsEnd", 4)
    ev = Evaluator(4)
    i, x = next((i, x) for i in reversed(range(len(p.relations))) for x in p.alphabet
                if ev(p.relations[i].lhs) != ev(p.relations[i].rhs + (x,)))
    rels = list(p.relations)
    rels[i] = Relation(rels[i].lhs, rels[i].rhs + (x,), rels[i].label)
    bad_p = type(p)(p.alphabet, rels, p.name, p.n)
    flagged["mutated relation / check"] = check_relations(bad_p, m.assignment()).status == REFUTED
    flagged["mutated relation / guess"] = guess_and_prove(m, bad_p, family_for("PsEnd", 4)).status != VERIFIED
    flagged["mutated relation / exact"] = exact_size(bad_p, 159).status != VERIFIED
    # dropped family word
    f = family_for("PwEnd", 4)
    flagged["dropped word"] = guess_and_prove(generate_class("PwEnd", 4), presentation_for("PwEnd", 4),
                                              f.without(len(f) // 2)).status != VERIFIED
    # wrong formula constant
    real = card_formula
    monkeypatch.setattr(cli, "card_formula", lambda cls, n: real(cls, n) + (1 if cls == "PEnd" else 0))
    flagged["wrong formula / counts"] = cli.main(["counts", "--n", "4", "--classes", "PEnd", "-o", "/dev/null"]) != 0
    flagged["wrong formula / exact"] = exact_size(presentation_for("PEnd", 4), real("PEnd", 4) + 1).status != VERIFIED
    missed = [k for k, v in flagged.items() if not v]
    report(8, "fault injection flagged as non-Verified", not missed, f"missed={missed}")
