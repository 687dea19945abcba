"""Presentation verification: relation checks, Guess-and-Prove, exact size.

Guess-and-Prove shows that ``<X | R>`` presents a finite monoid ``M`` by
checking that the relations hold in ``M``, that a word family ``W`` containing
the empty word maps bijectively onto ``M``, and that ``W`` is closed under
right multiplication by generators modulo the congruence generated by ``R``.
The exact route enumerates the presented monoid and compares its order with
the cardinality formula.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Mapping

from .enumeration import MonoidTable, card_formula, generate_class
from .families import CanonicalFamily, builder, family_for
from .generators import assignment as gen_assignment
from .presentation import EMPTY, Presentation, Word, format_word, pw, word
from .ptrans import PartialMap, compose_entries
from .rewrite import Distinct, Proof, RewriteSystem, SearchLimits, congruent, kb_complete
from .todd_coxeter import DEFAULT_CAP, tc_enumerate
from .words import (
    Evaluator,
    eval_word,
    presentation_for,
    relations_R1,
    relations_Rbar,
    relations_Rc,
    relations_Rs,
    relations_Rsw,
    relations_Rw,
)

VERIFIED = "Verified"
REFUTED = "Refuted"
INCONCLUSIVE = "Inconclusive"
STRATEGIES = ("GuessProve", "Exact", "Both")
PRESENTED_CLASSES = ("2PT", "PsEnd", "PswEnd", "PEnd", "PwEnd", "IEnd")


@dataclass
class Verdict:
    status: str
    witness: object = None
    stats: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def __post_init__(self):
        if self.status not in (VERIFIED, REFUTED, INCONCLUSIVE):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == REFUTED and self.witness is None:
            raise ValueError("a Refuted verdict needs a witness")
        if self.status == VERIFIED and self.witness is not None:
            raise ValueError("a Verified verdict carries no witness")

    def __bool__(self):
        return self.status == VERIFIED

    def report(self, cls: str = "", n: int | None = None, strategy: str = "", timings: bool = False) -> dict:
        counts = {k: self.stats.get(k) for k in ("monoid", "family", "tc")}
        out = {
            "class": cls,
            "n": n,
            "strategy": strategy,
            "status": self.status,
            "counts": counts,
            "failures": list(self.failures),
        }
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if timings:
            out["timing_ms"] = self.stats.get("timing_ms")
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.report(**kw), sort_keys=True)


def _jsonable(x):
    if isinstance(x, tuple) and all(isinstance(a, str) for a in x):
        return format_word(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(a) for a in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, PartialMap):
        return str(x)
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


def _combine(parts: list[Verdict]) -> str:
    statuses = [v.status for v in parts]
    if REFUTED in statuses:
        return REFUTED
    if INCONCLUSIVE in statuses:
        return INCONCLUSIVE
    return VERIFIED


# -- relation check -------------------------------------------------------------


def check_relations(p: Presentation, assignment: Mapping[str, PartialMap]) -> Verdict:
    missing = [x for x in p.alphabet if x not in assignment]
    if missing:
        raise ValueError(f"assignment misses letters {missing}")
    n = next(iter(assignment.values())).n
    for i, r in enumerate(p.relations):
        if eval_word(r.lhs, assignment, n) != eval_word(r.rhs, assignment, n):
            w = {"relation": i, "label": r.label, "lhs": format_word(r.lhs), "rhs": format_word(r.rhs)}
            return Verdict(REFUTED, w, {"relations": len(p.relations)}, [f"relation {r.label or i} fails"])
    return Verdict(VERIFIED, None, {"relations": len(p.relations)})


# -- rewriter cache -------------------------------------------------------------

_KB_CACHE: dict = {}


def _key(p: Presentation):
    return (p.alphabet, tuple((r.lhs, r.rhs) for r in p.relations))


def rewriter_for(p: Presentation, lim: SearchLimits | None = None):
    """A Knuth-Bendix system for ``p``: complete if completion finished within
    ``lim``, else the partial system (still sound for congruence proofs)."""
    lim = lim or SearchLimits()
    key = (_key(p), lim.max_rules, lim.max_passes)
    if key not in _KB_CACHE:
        res = kb_complete(p, lim)
        _KB_CACHE[key] = res if isinstance(res, RewriteSystem) else res.partial
    return _KB_CACHE[key]


def is_congruent(u: Word, v: Word, p: Presentation, lim: SearchLimits | None = None):
    """``congruent`` with the (possibly partial) completion of ``p`` as rewriter."""
    return congruent(u, v, p, lim, rewriter=rewriter_for(p, lim))


# Completion budget for the lemma checks; R_1 presents an infinite monoid and
# never completes, but a short partial system already settles every instance.
LEMMA_KB_RULES = 2_000


# -- Guess and Prove --------------------------------------------------------------


def guess_and_prove(m: MonoidTable, p: Presentation, f: CanonicalFamily, lim: SearchLimits | None = None,
                    rewriter: RewriteSystem | None = None) -> Verdict:
    t0 = time.perf_counter()
    lim = lim or SearchLimits()
    stats = {"monoid": len(m), "family": len(f)}
    gens = m.assignment()
    if set(p.alphabet) != set(gens):
        raise ValueError("presentation alphabet does not match the monoid generators")
    if set(f.alphabet) != set(p.alphabet):
        raise ValueError("family alphabet does not match the presentation")

    rel = check_relations(p, gens)
    if not rel:
        return Verdict(REFUTED, rel.witness, stats, rel.failures)
    if EMPTY not in f:
        return Verdict(REFUTED, {"missing": "empty word"}, stats, ["empty word not in family"])

    n = m.n
    ev = {x: gens[x].entries for x in p.alphabet}
    elements = m.element_set()
    image: dict[tuple, Word] = {}
    for w in f.words:
        e = eval_word(w, gens, n).entries
        if PartialMap(e) not in elements:
            return Verdict(REFUTED, {"word": w, "value": str(PartialMap(e))}, stats, ["family word outside the monoid"])
        if e in image:
            return Verdict(REFUTED, {"words": [image[e], w]}, stats, ["two family words evaluate equally"])
        image[e] = w
    if len(image) != len(m):
        return Verdict(REFUTED, {"family": len(image), "monoid": len(m)}, stats, ["family does not cover the monoid"])

    rw = rewriter if rewriter is not None else rewriter_for(p, lim)
    stats["rules"] = len(rw)
    stats["complete"] = rw.complete
    stuck = []
    wrong = []
    visited = 0
    for w in f.words:
        e = eval_word(w, gens, n).entries
        for x in p.alphabet:
            target = image[compose_entries(e, ev[x])]
            res = congruent(w + (x,), target, p, lim, rewriter=rw)
            if isinstance(res, Proof):
                visited += res.visited
            elif isinstance(res, Distinct):
                wrong.append((w, x, target))
            else:
                stuck.append((w, x, target))
    stats["closure_checks"] = len(f) * len(p.alphabet)
    stats["visited"] = visited
    stats["timing_ms"] = round(1000 * (time.perf_counter() - t0))
    if wrong:
        w, x, target = wrong[0]
        fails = [f"{format_word(w + (x,))} !~ {format_word(t)}" for w, x, t in wrong]
        return Verdict(REFUTED, {"word": w, "letter": x, "target": target}, stats, fails)
    if stuck:
        fails = [f"stuck: {format_word(w)} * {x} ~ {format_word(t)}" for w, x, t in stuck]
        return Verdict(INCONCLUSIVE, None, stats, fails)
    return Verdict(VERIFIED, None, stats)


# -- exact size ---------------------------------------------------------------------


def exact_size(p: Presentation, expected: int, cap: int = DEFAULT_CAP) -> Verdict:
    """Relations hold and the presented monoid has exactly ``expected`` elements."""
    t0 = time.perf_counter()
    rel = check_relations(p, gen_assignment(p.alphabet, p.n))
    if not rel:
        return Verdict(REFUTED, rel.witness, {"monoid": expected}, rel.failures)
    res = tc_enumerate(p, cap)
    stats = {"monoid": expected, "tc": res.size, "tc_defined": res.defined,
             "timing_ms": round(1000 * (time.perf_counter() - t0))}
    if not res:
        return Verdict(INCONCLUSIVE, None, stats, [f"enumeration cap {cap} reached"])
    if res.size != expected:
        return Verdict(REFUTED, {"tc": res.size, "expected": expected}, stats,
                       [f"presented monoid has {res.size} elements, expected {expected}"])
    return Verdict(VERIFIED, None, stats)


@dataclass(frozen=True)
class VerifyConfig:
    limits: SearchLimits = field(default_factory=SearchLimits)
    tc_cap: int = DEFAULT_CAP
    R0: Presentation | None = None


def verify_presentation(cls: str, n: int, strategy: str = "GuessProve", cfg: VerifyConfig | None = None) -> Verdict:
    if cls not in PRESENTED_CLASSES:
        raise ValueError(f"no presentation is verified for class {cls!r}")
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}")
    if n < 4:
        raise ValueError(f"presentations are verified for n >= 4, got n={n}")
    cfg = cfg or VerifyConfig()
    t0 = time.perf_counter()
    p = presentation_for(cls, n, cfg.R0)
    parts: list[Verdict] = []
    stats: dict = {"monoid": card_formula(cls, n)}
    if strategy in ("GuessProve", "Both"):
        m = generate_class(cls, n)
        g = guess_and_prove(m, p, family_for(cls, n), cfg.limits)
        parts.append(g)
        stats["family"] = g.stats.get("family")
        if len(m) != stats["monoid"]:
            parts.append(Verdict(REFUTED, {"enumerated": len(m), "formula": stats["monoid"]}, {},
                                 ["enumerated monoid disagrees with the formula"]))
    if strategy in ("Exact", "Both"):
        x = exact_size(p, stats["monoid"], cfg.tc_cap)
        parts.append(x)
        stats["tc"] = x.stats.get("tc")
    stats["timing_ms"] = round(1000 * (time.perf_counter() - t0))
    status = _combine(parts)
    failures = [msg for v in parts for msg in v.failures]
    witness = next((v.witness for v in parts if v.status == REFUTED), None)
    return Verdict(status, witness, stats, failures)


# -- lemma suite ----------------------------------------------------------------------


@dataclass(frozen=True)
class LemmaResult:
    name: str
    lhs: Word
    rhs: Word
    presentation: str
    result: str  # "Yes", "No" or "Inconclusive"
    detail: str = ""

    @property
    def holds(self) -> bool:
        return self.result == "Yes"

    def row(self) -> dict:
        return {"lemma": self.name, "lhs": format_word(self.lhs), "rhs": format_word(self.rhs),
                "presentation": self.presentation, "result": self.result, "detail": self.detail}


def _primed_blocks(n: int) -> list[Word]:
    a0p = word(pw("b0", n - 2), "a0 b0")
    b0p = word("b0 a0")
    f0p = word("a0 f0 a0")
    e0p = word("a0", a0p, "e0", a0p, "a0")
    return [a0p, b0p, e0p, f0p]


def random_fixing_word(rng: random.Random, n: int, max_blocks: int = 5) -> Word:
    """A word over a0, b0, e0, f0 whose value fixes 0 and 1: a product of primed generators."""
    blocks = _primed_blocks(n)
    out: Word = EMPTY
    for _ in range(rng.randint(1, max_blocks)):
        out += rng.choice(blocks)
    return out


def random_pt_word(rng: random.Random, max_len: int = 10) -> Word:
    return tuple(rng.choice(("a0", "b0", "e0", "f0")) for _ in range(rng.randint(1, max_len)))


def _absorb_target(w: Word, n: int) -> Word:
    """The W0 word of the map fixing 0 and 1 that agrees with w f0 on the other leaves."""
    ev = Evaluator(n)
    e = list(ev(w + ("f0",)).entries)
    e[0], e[1] = 0, 1
    return builder(n).W0_lookup()[PartialMap(tuple(e))]


def _check(name: str, u: Word, v: Word, p: Presentation, lim: SearchLimits) -> LemmaResult:
    kb = SearchLimits(max_rules=min(lim.max_rules, LEMMA_KB_RULES))
    res = congruent(u, v, p, lim, rewriter=rewriter_for(p, kb))
    if isinstance(res, Proof):
        return LemmaResult(name, u, v, p.name, "Yes", f"{len(res.steps)} steps")
    if isinstance(res, Distinct):
        return LemmaResult(name, u, v, p.name, "No", "distinct normal forms")
    return LemmaResult(name, u, v, p.name, "Inconclusive", res.reason)


def lemma_suite(n: int = 4, samples: int = 20, seed: int = 0, lim: SearchLimits | None = None) -> list[LemmaResult]:
    lim = lim or SearchLimits()
    rng = random.Random(seed)
    out = [
        _check("z^3 ~ z", pw("z", 3), ("z",), relations_Rs(n), lim),
        _check("z0^2 ~ z0", pw("z0", 2), ("z0",), relations_Rsw(n), lim),
        _check("b0^(n-2) e1 b0 c ~ c^2", word(pw("b0", n - 2), "e1 b0 c"), pw("c", 2), relations_Rbar(n), lim),
    ]
    R1, Rc, Rw = relations_R1(n), relations_Rc(n), relations_Rw(n)
    for _ in range(samples):
        w = random_fixing_word(rng, n)
        out.append(_check("c w ~ w c", ("c",) + w, w + ("c",), R1, lim))
    for _ in range(samples):
        w = random_pt_word(rng)
        out.append(_check("c w f0 ~ w' c", ("c",) + w + ("f0",), _absorb_target(w, n) + ("c",), Rc, lim))
    for _ in range(samples):
        w = random_fixing_word(rng, n)
        out.append(_check("c0 w ~ w c0", ("c0",) + w, w + ("c0",), Rw, lim))
    for _ in range(samples):
        w = random_pt_word(rng)
        out.append(_check("c0 w f0 ~ w' c0", ("c0",) + w + ("f0",), _absorb_target(w, n) + ("c0",), Rw, lim))
    return out
