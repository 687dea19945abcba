"""Word evaluation and the relation sets of the six presentations."""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from .enumeration import derive_presentation, generate_class
from .generators import make
from .presentation import EMPTY, Presentation, Relation, Word, pw, word
from .ptrans import PartialMap, compose_entries, identity

PT_LETTERS = ("a0", "b0", "e0", "f0")


def eval_word(w: Word, assignment: Mapping[str, PartialMap], n: int | None = None) -> PartialMap:
    """Left-to-right product of the letters of ``w``; the empty word is the identity."""
    if n is None:
        n = next(iter(assignment.values())).n
    out = identity(n).entries
    for x in w:
        out = compose_entries(out, assignment[x].entries)
    return PartialMap._raw(out)


class Evaluator:
    """Caches the letter assignment for one n and evaluates words against it."""

    def __init__(self, n: int, letters=None):
        self.n = n
        self._maps: dict[str, PartialMap] = {}
        for x in letters or ():
            self._maps[x] = make(x, n)

    def __getitem__(self, x: str) -> PartialMap:
        m = self._maps.get(x)
        if m is None:
            m = self._maps[x] = make(x, self.n)
        return m

    def __call__(self, w: Word) -> PartialMap:
        out = identity(self.n).entries
        for x in w:
            out = compose_entries(out, self[x].entries)
        return PartialMap._raw(out)

    def as_dict(self, letters) -> dict[str, PartialMap]:
        return {x: self[x] for x in letters}


def _rel(lhs, rhs, label) -> Relation:
    return Relation(word(lhs), word(rhs), label)


@lru_cache(maxsize=None)
def default_R0(n: int) -> Presentation:
    """Cayley presentation of PT(Omega_{n-1})zeta on a0, b0, e0, f0."""
    p = derive_presentation(generate_class("PTzeta", n), name="R0")
    p.notes.append("machine-derived: nf(s) x = nf(s x) over the non-tree Cayley edges")
    return p


def _check_r0(R0: Presentation) -> Presentation:
    if set(R0.alphabet) != set(PT_LETTERS):
        raise ValueError(f"R0 must be on the alphabet {PT_LETTERS}, got {R0.alphabet}")
    return R0


def _need_n4(n: int, what: str) -> None:
    if n < 4:
        raise ValueError(f"{what} is built for n >= 4, got n={n}")


def relations_Rd(n: int, R0: Presentation | None = None) -> Presentation:
    R0 = _check_r0(R0 if R0 is not None else default_R0(n))
    extra = [
        _rel("d d", "d", "Rd:d^2=d"),
        _rel("a0 d", "d a0", "Rd:a0d=da0"),
        _rel("b0 d", "d b0", "Rd:b0d=db0"),
        _rel("e0 d", "d e0", "Rd:e0d=de0"),
        _rel("f0 d", "d f0", "Rd:f0d=df0"),
    ]
    p = Presentation(PT_LETTERS + ("d",), list(R0.relations) + extra, "R_d", n, list(R0.notes))
    return p


def relations_Rs(n: int, R0: Presentation | None = None) -> Presentation:
    _need_n4(n, "R_s")
    fb = pw("f0 b0", n - 1)
    extra = [
        _rel("a0 z", "z", "Rs:a0z=z"),
        _rel("b0 z", "z", "Rs:b0z=z"),
        _rel("e0 z", "z", "Rs:e0z=z"),
        _rel("d z", "z f0", "Rs:dz=zf0"),
        _rel("z d", word(fb, "z"), "Rs:zd=(f0b0)^(n-1)z"),
        _rel("z z", word(pw("e0 b0", n - 3), "e0"), "Rs:z^2=(e0b0)^(n-3)e0"),
        _rel(word("d", fb, "z"), word("d", fb), "Rs:d(f0b0)^(n-1)z=d(f0b0)^(n-1)"),
    ]
    p = relations_Rd(n, R0).extend(["z"], extra, "R_s")
    return p


def relations_Rsw(n: int, R0: Presentation | None = None) -> Presentation:
    fb = pw("f0 b0", n - 1)
    extra = [
        _rel("b0 z0", "z0", "Rsw:b0z0=z0"),
        _rel("z z0", "z0", "Rsw:zz0=z0"),
        _rel("z0 a0", "z0", "Rsw:z0a0=z0"),
        _rel("z0 b0", "z0", "Rsw:z0b0=z0"),
        _rel("z0 e0", "z0", "Rsw:z0e0=z0"),
        _rel("z0 f0", "z0", "Rsw:z0f0=z0"),
        _rel("d z0", "d z", "Rsw:dz0=dz"),
        _rel("z0 d", word("d", fb), "Rsw:z0d=d(f0b0)^(n-1)"),
    ]
    return relations_Rs(n, R0).extend(["z0"], extra, "R_sw")


def _commutations(letter: str, n: int, tag: str) -> list[Relation]:
    """The four relations making ``letter`` commute with the generators of PT^{0,1}_{n-2}."""
    a0p = word(pw("b0", n - 2), "a0 b0")
    b0p = word("b0 a0")
    f0p = word("a0 f0 a0")
    e0p = word("a0", a0p, "e0", a0p, "a0")
    return [
        _rel(word(letter, a0p), word(a0p, letter), f"{tag}:{letter}a0'=a0'{letter}"),
        _rel(word(letter, b0p), word(b0p, letter), f"{tag}:{letter}b0'=b0'{letter}"),
        _rel(word(letter, f0p), word(f0p, letter), f"{tag}:{letter}f0'=f0'{letter}"),
        _rel(word(letter, e0p), word(e0p, letter), f"{tag}:{letter}e0'=e0'{letter}"),
    ]


def relations_R1(n: int, R0: Presentation | None = None) -> Presentation:
    """R0 plus the four commutations of c with the primed generators."""
    _need_n4(n, "R_1")
    R0 = _check_r0(R0 if R0 is not None else default_R0(n))
    return Presentation(PT_LETTERS + ("c",), list(R0.relations) + _commutations("c", n, "R1"), "R_1", n, list(R0.notes))


def relations_Rc(n: int, R0: Presentation | None = None) -> Presentation:
    _need_n4(n, "R_c")
    extra = [
        _rel("c c", "f0 d", "Rc:c^2=f0d"),
        _rel("c f0", "c", "Rc:cf0=c"),
        _rel("f0 c", "f0 d", "Rc:f0c=f0d"),
        _rel("c d", "f0 d", "Rc:cd=f0d"),
        _rel("d c", "c", "Rc:dc=c"),
        *_commutations("c", n, "Rc"),
        _rel(word("c z", pw("b0", n - 2)), word("a0", pw("b0 e0", n - 3), "c"), "Rc:czb0^(n-2)=a0(b0e0)^(n-3)c"),
    ]
    base = relations_Rs(n, R0)
    alphabet = PT_LETTERS + ("c", "d", "z")
    return Presentation(alphabet, list(base.relations) + extra, "R_c", n, list(base.notes))


def relations_Rw(n: int, R0: Presentation | None = None) -> Presentation:
    _need_n4(n, "R_w")
    extra = [
        _rel("c0 c0", "c0", "Rw:c0^2=c0"),
        _rel("e0 c0", "c0 a0 c0", "Rw:e0c0=c0a0c0"),
        _rel("c0 f0", "c0", "Rw:c0f0=c0"),
        _rel("f0 c0", "f0", "Rw:f0c0=f0"),
        _rel("c0 d", "f0 d", "Rw:c0d=f0d"),
        *_commutations("c0", n, "Rw"),
        _rel("c0 z c0", "z c0", "Rw:c0zc0=zc0"),
        _rel("z z c0", "z c0", "Rw:z^2c0=zc0"),
        _rel(word("d c0 z", pw("b0", n - 2)), word("a0", pw("b0 e0", n - 3), "d c0"),
             "Rw:dc0zb0^(n-2)=a0(b0e0)^(n-3)dc0"),
    ]
    base = relations_Rs(n, R0)
    alphabet = PT_LETTERS + ("c0", "d", "z")
    return Presentation(alphabet, list(base.relations) + extra, "R_w", n, list(base.notes))


def relations_R_paut(n: int) -> Presentation:
    """The 3n+9 relations on a0, b0, e1, d, z1."""
    _need_n4(n, "the partial automorphism relations")
    b = lambda k: pw("b0", k)  # noqa: E731
    rels = [
        _rel("a0 a0", EMPTY, "R1"),
        _rel(b(n - 1), EMPTY, "R2"),
        _rel(pw("b0 a0", n - 2), EMPTY, "R3"),
        _rel(pw(word("a0", b(n - 2), "a0 b0"), 3), EMPTY, "R4"),
    ]
    for j in range(2, n - 2):
        rels.append(_rel(pw(word("a0", b(n - 1 - j), "a0", b(j)), 2), EMPTY, f"R5[j={j}]"))
    rels += [
        _rel("e1 e1", "e1", "R6:e1^2=e1"),
        _rel("d d", "d", "R6:d^2=d"),
        _rel("a0 e1", "e1 a0", "R7:a0e1=e1a0"),
        _rel("d a0", "a0 d", "R7:da0=a0d"),
        _rel("d b0", "b0 d", "R7:db0=b0d"),
        _rel("d e1", "e1 d", "R7:de1=e1d"),
        _rel(word("b0 a0", b(n - 2), "e1 b0 a0", b(n - 2)), word(b(n - 2), "e1 b0"), "R8"),
        _rel(pw(word(b(n - 2), "e1 b0 a0"), 2), pw(word("a0", b(n - 2), "e1 b0"), 2), "R9"),
        _rel(word(b(n - 2), "e1 b0 a0", b(n - 2), "e1 b0"), pw(word("a0", b(n - 2), "e1 b0"), 2), "R10"),
        _rel("z1 z1 z1", "z1", "R11"),
        _rel("z1 b0", "z1 a0", "R12"),
        _rel(word(b(n - 2), "z1"), "a0 z1", "R13"),
    ]
    for j in range(1, n - 2):
        rels.append(_rel(word("a0", b(j), "z1"), word(b(j), "z1"), f"R14[j={j}]"))
    rels.append(_rel("e1 b0 z1", "z1 d", "R15"))
    for j in range(2, n - 2):
        rels.append(_rel(word("e1", b(j), "z1"), word(b(j), "z1"), f"R16[j={j}]"))
    rels += [
        _rel(word(pw("e1 b0", n - 3), "e1"), word("z1 z1 a0", b(n - 4)), "R17"),
        _rel("d z1 z1", "z1 a0 z1", "R18"),
        _rel("d z1 d z1", "d z1 d", "R19"),
    ]
    return Presentation(("a0", "b0", "e1", "d", "z1"), rels, "R", n)


def relations_Rbar(n: int) -> Presentation:
    base = relations_R_paut(n)
    b = lambda k: pw("b0", k)  # noqa: E731
    mid24 = word("c", b(n - 2), "e1 b0")
    mid25 = word("d", b(n - 2), "e1 b0")
    extra = [
        _rel("c z1", "z1 z1 d", "R20"),
        _rel("z1 c", word("z1 z1", b(n - 2), "e1 b0"), "R21"),
        _rel("c a0 z1", "a0 c a0 z1 z1", "R22"),
        _rel("c e1", "e1 c", "R23"),
        _rel("d c", mid24, "R24a"),
        _rel(mid24, "c", "R24b"),
        _rel("c d", mid25, "R25a"),
        _rel(mid25, "c c", "R25b"),
        _rel("c b0 a0", "b0 a0 c", "R26a"),
        _rel(word("c", b(n - 2), "a0 b0"), word(b(n - 2), "a0 b0 c"), "R26b"),
    ]
    p = Presentation(("a0", "b0", "e1", "c", "d", "z1"), list(base.relations) + extra, "R_bar", n)
    p.notes.append("chained equalities R24 and R25 split into two relations each")
    return p


PRESENTATION_OF = {
    "2PT": relations_Rd,
    "PsEnd": relations_Rs,
    "PswEnd": relations_Rsw,
    "PEnd": relations_Rc,
    "PwEnd": relations_Rw,
    "IEnd": lambda n, R0=None: relations_Rbar(n),
    "PAut": lambda n, R0=None: relations_R_paut(n),
}


def presentation_for(cls: str, n: int, R0: Presentation | None = None) -> Presentation:
    try:
        build = PRESENTATION_OF[cls]
    except KeyError:
        raise ValueError(f"no presentation for class {cls!r}") from None
    return build(n, R0)


def w_A_word(leaves, n: int) -> Word:
    """A word over b0, f0 for the partial identity on ``leaves`` plus 0.

    Each missing leaf j is removed by rotating it to 1, applying f0 and
    rotating back. The full leaf set gives the empty word.
    """
    a = set(leaves)
    if not a:
        raise ValueError("the leaf set must be nonempty")
    if not a <= set(range(1, n)):
        raise ValueError(f"leaves must lie in 1..{n - 1}")
    out: list[str] = []
    for j in sorted(set(range(1, n)) - a):
        out += pw("b0", (1 - j) % (n - 1))
        out.append("f0")
        out += pw("b0", (j - 1) % (n - 1))
    return tuple(out)
