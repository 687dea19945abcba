"""Enumerating the monoids: closure under generators, predicate filtering,
closed-form cardinalities and Cayley presentations."""

from __future__ import annotations

import csv
import io
import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import comb, factorial

from . import stargraph
from .generators import QSeq, generating_set, sigma
from .presentation import Presentation, Relation, Word, format_word
from .ptrans import (
    UNDEF,
    PartialMap,
    all_partial_maps,
    compose_entries,
    identity,
    image,
    inverse,
    is_injective,
)

GRAPH_CLASSES = ("PsEnd", "PswEnd", "PEnd", "PwEnd", "PAut", "IEnd")
MONOID_CLASSES = GRAPH_CLASSES + ("2PT", "PTzeta", "Izeta")
DEFAULT_MAX_ELEMENTS = 1_000_000
DEFAULT_EXHAUSTIVE_BOUND = 7


class ResourceLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class MonoidTable:
    elements: list[PartialMap]
    gen_names: tuple[str, ...]
    cayley: list[tuple[int, ...]]
    nf_word: list[Word]

    def __len__(self):
        return len(self.elements)

    @property
    def n(self) -> int:
        return self.elements[0].n

    def index(self) -> dict[PartialMap, int]:
        return {m: i for i, m in enumerate(self.elements)}

    def element_set(self) -> frozenset[PartialMap]:
        return frozenset(self.elements)

    def assignment(self) -> dict[str, PartialMap]:
        return {x: self.elements[self.cayley[0][g]] for g, x in enumerate(self.gen_names)}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "element", "nf_word"] + [f"*{x}" for x in self.gen_names])
        for i, m in enumerate(self.elements):
            w.writerow([i, str(m), format_word(self.nf_word[i])] + list(self.cayley[i]))
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "n": self.n,
            "generators": list(self.gen_names),
            "elements": [
                {"index": i, "element": str(m), "nf_word": format_word(self.nf_word[i]), "cayley": list(self.cayley[i])}
                for i, m in enumerate(self.elements)
            ],
        }
        return json.dumps(doc, indent=1)


def generate(gens, names=None, n: int | None = None, max_elements: int = DEFAULT_MAX_ELEMENTS) -> MonoidTable:
    """Breadth-first closure of ``gens`` from the identity.

    Elements are discovered in shortlex order of their first word, so
    ``nf_word`` is the shortlex-least word (letters ordered as ``gens``).
    """
    gens = list(gens)
    if names is None:
        names = [f"x{i}" for i in range(len(gens))]
    names = tuple(names)
    if len(names) != len(gens):
        raise ValueError("one name per generator")
    if n is None:
        if not gens:
            raise ValueError("n is required when there are no generators")
        n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("all generators must act on the same vertex set")

    gen_entries = [g.entries for g in gens]
    elems = [identity(n).entries]
    index = {elems[0]: 0}
    words: list[Word] = [()]
    cayley: list[tuple[int, ...]] = []
    i = 0
    while i < len(elems):
        cur = elems[i]
        row = []
        for gi, ge in enumerate(gen_entries):
            prod = compose_entries(cur, ge)
            j = index.get(prod)
            if j is None:
                j = len(elems)
                if j >= max_elements:
                    raise ResourceLimitExceeded(f"more than {max_elements} elements")
                index[prod] = j
                elems.append(prod)
                words.append(words[i] + (names[gi],))
            row.append(j)
        cayley.append(tuple(row))
        i += 1
    return MonoidTable([PartialMap._raw(e) for e in elems], names, cayley, words)


def generate_class(cls: str, n: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> MonoidTable:
    named = generating_set(cls, n)
    return generate([g for _, g in named], [x for x, _ in named], n, max_elements)


# -- class membership by predicate -------------------------------------------


def _in_ptzeta(f: PartialMap) -> bool:
    e = f.entries
    return e[0] == 0 and all(y != 0 for y in e[1:])


def _in_pt_leaves(f: PartialMap) -> bool:
    e = f.entries
    return e[0] == UNDEF and all(y != 0 for y in e[1:])


def _in_izeta(f: PartialMap) -> bool:
    return _in_ptzeta(f) and is_injective(f)


def _in_2pt(f: PartialMap) -> bool:
    return _in_ptzeta(f) or _in_pt_leaves(f)


def _in_k0(f: PartialMap) -> bool:
    im = image(f)
    return is_injective(f) and f.entries[0] == UNDEF and 0 in im and len(im) >= 2


PREDICATES = {
    **stargraph.CLASS_PREDICATES,
    "2PT": _in_2pt,
    "PTzeta": _in_ptzeta,
    "Izeta": _in_izeta,
    "K0": _in_k0,
}


def predicate_monoid(cls: str, n: int, bound: int = DEFAULT_EXHAUSTIVE_BOUND) -> frozenset[PartialMap]:
    if n > bound:
        raise ResourceLimitExceeded(f"exhaustive enumeration capped at n={bound}; asked for n={n}")
    pred = PREDICATES[cls]
    return frozenset(f for f in all_partial_maps(n) if pred(f))


# -- closed-form cardinalities ------------------------------------------------


def card_formula(cls: str, n: int) -> int:
    if n < 3:
        raise ValueError("cardinality formulas are stated for n >= 3")
    m = n - 1
    if cls == "PsEnd":
        return 2 * n ** m + n * 2 ** m - 1
    if cls == "PswEnd":
        return 2 * n ** m + n * 2 ** n - n - 1
    if cls == "PEnd":
        return (n + 1) ** m + n ** m + m * 2 ** m
    if cls == "PwEnd":
        return 2 * (n + 1) ** m + m * 3 ** m
    if cls == "PAut":
        return 1 + n * n + 2 * sum(comb(m, k) ** 2 * factorial(k) for k in range(1, n))
    if cls == "IEnd":
        return 3 + 3 * n * n - 4 * n + sum((comb(n, k) + comb(m, k)) * comb(m, k) * factorial(k) for k in range(2, n))
    if cls == "K0":
        return sum(comb(m, k) * comb(m, k - 1) * factorial(k) for k in range(2, n))
    if cls == "2PT":
        return 2 * n ** m
    if cls == "PTzeta":
        return n ** m
    if cls == "Izeta":
        return sum(comb(m, k) ** 2 * factorial(k) for k in range(0, n))
    raise ValueError(f"no formula for class {cls!r}")


# -- the set-union characterizations, condition by condition -----------------


def _leaf_images(f: PartialMap) -> set[int]:
    return {y for y in f.entries[1:] if y != UNDEF}


def _char_psend(f: PartialMap) -> bool:
    e0 = f.entries[0]
    im = image(f)
    return (
        _in_2pt(f)
        or (e0 == UNDEF and im == {0})
        or (e0 != UNDEF and e0 != 0 and _leaf_images(f) <= {0})
    )


def _char_pswend(f: PartialMap) -> bool:
    return _char_psend(f) or (f.entries[0] != UNDEF and len(image(f)) == 1)


def _char_pend(f: PartialMap) -> bool:
    im = image(f)
    return _char_psend(f) or (f.entries[0] == UNDEF and 0 in im and bool(im - {0}))


def _char_pwend(f: PartialMap) -> bool:
    e = f.entries
    e0 = e[0]
    leaf_imgs = _leaf_images(f)
    dom_size = sum(1 for y in e if y != UNDEF)
    return (
        _char_pend(f)
        or (e0 == 0 and 0 in leaf_imgs)
        or (e0 != UNDEF and dom_size > 1 and e0 != 0 and e0 in leaf_imgs and leaf_imgs <= {0, e0})
    )


def _char_paut(f: PartialMap) -> bool:
    # partial automorphisms are the injective partial strong endomorphisms
    return is_injective(f) and _char_psend(f)


def _char_iend(f: PartialMap) -> bool:
    return _char_paut(f) or _in_k0(f)


CHARACTERIZATIONS = {
    "PsEnd": _char_psend,
    "PswEnd": _char_pswend,
    "PEnd": _char_pend,
    "PwEnd": _char_pwend,
    "PAut": _char_paut,
    "IEnd": _char_iend,
    "2PT": _in_2pt,
}


@dataclass(frozen=True)
class CharacterizationResult:
    cls: str
    n: int
    status: str
    sizes: dict
    witness: str | None = None


def verify_characterization(cls: str, n: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> CharacterizationResult:
    """Generated monoid == predicate class == literal union of conditions."""
    generated = generate_class(cls, n, max_elements).element_set()
    by_predicate = predicate_monoid(cls, n)
    literal = frozenset(f for f in all_partial_maps(n) if CHARACTERIZATIONS[cls](f))
    sizes = {"generated": len(generated), "predicate": len(by_predicate), "literal": len(literal)}
    if cls == "IEnd":
        sizes["K0"] = sum(1 for f in by_predicate if _in_k0(f))
    witness = None
    for a, b in ((generated, by_predicate), (by_predicate, literal), (literal, generated)):
        diff = a ^ b
        if diff:
            witness = str(min(diff))
            break
    return CharacterizationResult(cls, n, "Refuted" if witness else "Verified", sizes, witness)


# -- the counting decompositions behind the canonical-form counts ------------


def B_set(psend: frozenset, k: int) -> set[PartialMap]:
    need = set(range(k + 1))
    return {f for f in psend if need <= image(f) and f.entries[0] == 0 and len(image(f)) >= 3}


def C_set(pend_minus_psend: frozenset, n: int, k: int) -> set[PartialMap]:
    return {f for f in pend_minus_psend if min(set(range(1, n)) - image(f)) == k}


def D_set(n: int) -> set[PartialMap]:
    """0 -> 0, a nonempty block A -> 1 and a block B -> 2."""
    out = set()
    # each leaf is undefined, sent to 1 or sent to 2
    for labels in product((UNDEF, 1, 2), repeat=n - 1):
        if 1 not in labels:
            continue
        out.add(PartialMap._raw((0,) + labels))
    return out


def D_k_set(psend: frozenset, k: int) -> set[PartialMap]:
    need = set(range(1, k + 1))
    out = set()
    for f in psend:
        im = image(f)
        if not need <= im:
            continue
        e0 = f.entries[0]
        if (e0 == 0) or (e0 == UNDEF and len(im) >= 2):
            out.add(f)
    return out


def Gamma_set(pwend_minus_psend: frozenset, n: int, k: int) -> set[PartialMap]:
    if k == 0:
        return {f for f in pwend_minus_psend if f.entries[0] not in (UNDEF, 0)}
    leaves = set(range(1, n))
    out = set()
    for f in pwend_minus_psend:
        e0 = f.entries[0]
        if e0 not in (UNDEF, 0):
            continue
        if min(leaves - _leaf_images(f)) == k:
            out.add(f)
    return out


def all_qseqs(n: int) -> list[QSeq]:
    leaves = range(1, n)
    out = []
    for k in range(1, n - 1):
        for js in combinations(leaves, k):
            for is_ in permutations(leaves, k + 1):
                out.append(QSeq(tuple(is_), tuple(js)))
    return out


def phi_map(alpha: PartialMap, via: PartialMap, k: int) -> PartialMap:
    """alpha * via * sigma_k, the injections B_k -> C_k and D_k -> Gamma_k."""
    return alpha * via * sigma(k, alpha.n)


def psi_C(alpha: PartialMap, k: int) -> PartialMap:
    """Inverse-direction injection C_k -> B_k."""
    out = [UNDEF] * alpha.n
    out[0] = 0
    for x, y in enumerate(alpha.entries):
        if y == UNDEF:
            continue
        out[x] = y + 1 if y < k else y
    return PartialMap(out)


def psi_Gamma(alpha: PartialMap, k: int) -> PartialMap:
    """Inverse-direction injection Gamma_k -> D_k."""
    sinv = inverse(sigma(k, alpha.n)).entries
    out = [UNDEF] * alpha.n
    for x, y in enumerate(alpha.entries):
        if y == UNDEF:
            continue
        out[x] = 1 if (x != 0 and y == 0) else sinv[y]
    return PartialMap(out)


def counting_identities(n: int) -> list[tuple[str, int, int]]:
    """(name, lhs, rhs) for every cardinality identity behind the word counts."""
    psend = predicate_monoid("PsEnd", n)
    pend = predicate_monoid("PEnd", n)
    pwend = predicate_monoid("PwEnd", n)
    pend_extra = pend - psend
    pwend_extra = pwend - psend
    rows = []
    for k in range(1, n):
        rows.append((f"|B_{k}| = |C_{k}|", len(B_set(psend, k)), len(C_set(pend_extra, n, k))))
    for k in range(1, n):
        rows.append((f"|D_{k}| = |Gamma_{k}|", len(D_k_set(psend, k)), len(Gamma_set(pwend_extra, n, k))))
    rows.append(("|Gamma_0| = (n-1)|D|", len(Gamma_set(pwend_extra, n, 0)), (n - 1) * len(D_set(n))))
    rows.append(("|Q| = |K_0|", len(all_qseqs(n)), len(predicate_monoid("K0", n))))
    return rows


# -- Cayley presentation ------------------------------------------------------


def derive_presentation(t: MonoidTable, name: str = "") -> Presentation:
    """Relations nf(s) x = nf(s x) over every edge outside the BFS tree."""
    rels = []
    for i, row in enumerate(t.cayley):
        for g, j in enumerate(row):
            lhs = t.nf_word[i] + (t.gen_names[g],)
            if t.nf_word[j] == lhs:
                continue
            rels.append(Relation(lhs, t.nf_word[j], f"cayley:{i}.{t.gen_names[g]}"))
    return Presentation(t.gen_names, rels, name or "cayley", t.n)


def bfs_levels(t: MonoidTable) -> list[int]:
    return [len(w) for w in t.nf_word]


def shortest_word_lengths(t: MonoidTable) -> list[int]:
    """Independent BFS distances over the Cayley graph, for checking nf_word."""
    dist = [-1] * len(t)
    dist[0] = 0
    q = deque([0])
    while q:
        i = q.popleft()
        for j in t.cayley[i]:
            if dist[j] < 0:
                dist[j] = dist[i] + 1
                q.append(j)
    return dist
