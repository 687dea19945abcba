"""Canonical-form word families, one per presented monoid."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .enumeration import (
    B_set,
    D_k_set,
    D_set,
    all_qseqs,
    generate_class,
    predicate_monoid,
)
from .generators import Collapse, QDoublePrime, QPrime, realize, sigma
from .presentation import Word, format_word, pw, word
from .ptrans import PartialMap
from .words import Evaluator, w_A_word

ALPHABETS = {
    "2PT": ("a0", "b0", "e0", "f0", "d"),
    "PsEnd": ("a0", "b0", "e0", "f0", "d", "z"),
    "PswEnd": ("a0", "b0", "e0", "f0", "d", "z", "z0"),
    "PEnd": ("a0", "b0", "e0", "f0", "c", "d", "z"),
    "PwEnd": ("a0", "b0", "e0", "f0", "c0", "d", "z"),
    "PAut": ("a0", "b0", "e1", "d", "z1"),
    "IEnd": ("a0", "b0", "e1", "c", "d", "z1"),
}

FAMILY_OF = {"2PT": "W2PT", "PsEnd": "Ws", "PswEnd": "Wsw", "PEnd": "Wc", "PwEnd": "Ww", "PAut": "WA", "IEnd": "WI"}


@dataclass
class CanonicalFamily:
    tag: str
    words: list[Word]
    alphabet: tuple[str, ...]
    parts: dict[str, int] = field(default_factory=dict)

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w) -> bool:
        return tuple(w) in set(self.words)

    def lines(self) -> str:
        return "".join(format_word(w) + "\n" for w in self.words)

    def without(self, index: int) -> "CanonicalFamily":
        words = list(self.words)
        del words[index]
        return CanonicalFamily(self.tag + "-dropped", words, self.alphabet, dict(self.parts))


def _union(tag: str, alphabet, *named: tuple[str, list[Word]]) -> CanonicalFamily:
    words: list[Word] = []
    parts = {}
    for name, ws in named:
        parts[name] = len(ws)
        words.extend(ws)
    return CanonicalFamily(tag, words, tuple(alphabet), parts)


class FamilyBuilder:
    """Builds every family for one n, sharing the lookup tables."""

    def __init__(self, n: int):
        if n < 4:
            raise ValueError(f"families are built for n >= 4, got n={n}")
        self.n = n
        self.ev = Evaluator(n)
        self._cache: dict[str, list[Word]] = {}

    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    # -- PsEnd -----------------------------------------------------------------

    def fb(self) -> Word:
        return pw("f0 b0", self.n - 1)

    def W0(self) -> list[Word]:
        def build():
            t = generate_class("PTzeta", self.n)
            target = self.ev(self.fb())
            return [self.fb() if m == target else w for m, w in zip(t.elements, t.nf_word)]

        return self._memo("W0", build)

    def W0_lookup(self) -> dict[PartialMap, Word]:
        return self._memo("W0_lookup", lambda: {self.ev(w): w for w in self.W0()})

    def w_collapse(self, leaves) -> Word:
        return self.W0_lookup()[realize(Collapse(tuple(leaves)), self.n)]

    def _leaf_subsets(self):
        leaves = range(1, self.n)
        for k in range(1, self.n):
            yield from combinations(leaves, k)

    def W1(self) -> list[Word]:
        return [("d",) + w for w in self.W0()]

    def W2(self) -> list[Word]:
        n = self.n
        return [word(self.w_collapse(s), "z", pw("b0", j - 1)) for s in self._leaf_subsets() for j in range(1, n)]

    def W3(self) -> list[Word]:
        return [word("d", self.w_collapse(s), "z") for s in self._leaf_subsets()]

    def W4(self) -> list[Word]:
        return [word(self.fb(), "z", pw("b0", j - 1)) for j in range(1, self.n)]

    def Ws_lookup(self) -> dict[PartialMap, Word]:
        def build():
            return {self.ev(w): w for w in self.family("Ws").words}

        return self._memo("Ws_lookup", build)

    # -- PswEnd ----------------------------------------------------------------

    def _nonempty_leaf_sets(self):
        return [frozenset(s) for s in self._leaf_subsets()]

    def W5(self) -> list[Word]:
        return [word(w_A_word(a, self.n), "z0") for a in self._nonempty_leaf_sets()]

    def W6(self) -> list[Word]:
        return [
            word(w_A_word(a, self.n), "z0 z", pw("b0", k))
            for a in self._nonempty_leaf_sets()
            for k in range(0, self.n - 1)
        ]

    # -- PEnd / PwEnd ----------------------------------------------------------

    def _psend(self):
        return self._memo("psend", lambda: predicate_monoid("PsEnd", self.n))

    def w_sigma(self, k: int) -> Word:
        return self.Ws_lookup()[sigma(k, self.n)]

    def W7(self) -> list[Word]:
        look = self.Ws_lookup()
        out = []
        for k in range(1, self.n):
            for alpha in sorted(B_set(self._psend(), k)):
                out.append(word(look[alpha], "c", self.w_sigma(k)))
        return out

    def W8(self) -> list[Word]:
        look = self.Ws_lookup()
        out = []
        for k in range(1, self.n):
            for alpha in sorted(D_k_set(self._psend(), k)):
                out.append(word(look[alpha], "c0", self.w_sigma(k)))
        return out

    def W9(self) -> list[Word]:
        look = self.Ws_lookup()
        return [
            word(look[alpha], "c0 z", pw("b0", ell))
            for alpha in sorted(D_set(self.n))
            for ell in range(0, self.n - 1)
        ]

    # -- IEnd ------------------------------------------------------------------

    def WA(self) -> list[Word]:
        return self._memo("WA", lambda: list(generate_class("PAut", self.n).nf_word))

    def WA_lookup(self) -> dict[PartialMap, Word]:
        return self._memo("WA_lookup", lambda: {self.ev(w): w for w in self.WA()})

    def W10(self) -> list[Word]:
        look = self.WA_lookup()
        n = self.n
        return [
            word("d", look[realize(QPrime(q), n)], "c", look[realize(QDoublePrime(q), n)])
            for q in all_qseqs(n)
        ]

    # -- unions ----------------------------------------------------------------

    def family(self, tag: str) -> CanonicalFamily:
        key = "family:" + tag
        if key in self._cache:
            return self._cache[key]
        f = self._build(tag)
        self._cache[key] = f
        return f

    def _build(self, tag: str) -> CanonicalFamily:
        singles = {
            "W0": ("PTzeta", ("a0", "b0", "e0", "f0")),
            "W1": ("2PT", ALPHABETS["2PT"]),
            "W2": ("PsEnd", ALPHABETS["PsEnd"]),
            "W3": ("PsEnd", ALPHABETS["PsEnd"]),
            "W4": ("PsEnd", ALPHABETS["PsEnd"]),
            "W5": ("PswEnd", ALPHABETS["PswEnd"]),
            "W6": ("PswEnd", ALPHABETS["PswEnd"]),
            "W7": ("PEnd", ALPHABETS["PEnd"]),
            "W8": ("PwEnd", ALPHABETS["PwEnd"]),
            "W9": ("PwEnd", ALPHABETS["PwEnd"]),
            "W10": ("IEnd", ALPHABETS["IEnd"]),
        }
        if tag in singles:
            return CanonicalFamily(tag, getattr(self, tag)(), singles[tag][1], {tag: 0})
        if tag == "W2PT":
            return _union(tag, ALPHABETS["2PT"], ("W0", self.W0()), ("W1", self.W1()))
        if tag == "Ws":
            return _union(tag, ALPHABETS["PsEnd"], ("W0", self.W0()), ("W1", self.W1()), ("W2", self.W2()),
                          ("W3", self.W3()), ("W4", self.W4()))
        if tag == "Wsw":
            ws = self.family("Ws").words
            return _union(tag, ALPHABETS["PswEnd"], ("Ws", ws), ("W5", self.W5()), ("W6", self.W6()))
        if tag == "Wc":
            return _union(tag, ALPHABETS["PEnd"], ("Ws", self.family("Ws").words), ("W7", self.W7()))
        if tag == "Ww":
            ws = self.family("Ws").words
            return _union(tag, ALPHABETS["PwEnd"], ("Ws", ws), ("W8", self.W8()), ("W9", self.W9()))
        if tag == "WA":
            return _union(tag, ALPHABETS["PAut"], ("WA", self.WA()))
        if tag == "WI":
            return _union(tag, ALPHABETS["IEnd"], ("WA", self.WA()), ("W10", self.W10()))
        raise ValueError(f"unknown family {tag!r}")


@lru_cache(maxsize=16)
def builder(n: int) -> FamilyBuilder:
    return FamilyBuilder(n)


def family_W(tag: str, n: int) -> CanonicalFamily:
    return builder(n).family(tag)


def family_for(cls: str, n: int) -> CanonicalFamily:
    return family_W(FAMILY_OF[cls], n)


def expected_size(tag: str, n: int) -> int:
    """The count expressions attached to each family."""
    from .enumeration import card_formula

    two = 2 ** (n - 1) - 1
    if tag == "Ws":
        return n ** (n - 1) + n ** (n - 1) + (n - 1) * two + two + (n - 1)
    if tag == "Wsw":
        return expected_size("Ws", n) + two + (n - 1) * two
    if tag == "W2PT":
        return 2 * n ** (n - 1)
    if tag == "W10":
        return card_formula("K0", n)
    if tag == "WI":
        return card_formula("PAut", n) + card_formula("K0", n)
    if tag == "WA":
        return card_formula("PAut", n)
    if tag == "Wc":
        return card_formula("PEnd", n)
    if tag == "Ww":
        return card_formula("PwEnd", n)
    raise ValueError(tag)
