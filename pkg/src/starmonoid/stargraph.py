"""The star graph S_n and membership tests for its partial endomorphism classes."""

from __future__ import annotations

from dataclasses import dataclass

from .ptrans import UNDEF, PartialMap, inverse, is_injective


@dataclass(frozen=True)
class StarGraph:
    """Star on vertices 0..n-1 with center 0."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a star graph needs at least one vertex")

    def edges(self) -> list[frozenset[int]]:
        return [frozenset((0, i)) for i in range(1, self.n)]


def adjacent(g: StarGraph, u: int, v: int) -> bool:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertex out of range for S_{g.n}")
    return (u == 0) != (v == 0)


def _adj(u: int, v: int) -> bool:
    return (u == 0) != (v == 0)


@dataclass(frozen=True)
class ClassFlags:
    pend: bool
    pwend: bool
    psend: bool
    pswend: bool
    iend: bool
    paut: bool

    def implications_hold(self) -> bool:
        """Inclusions of the Hasse diagram, read as implications."""
        return (
            (not self.paut or (self.psend and self.iend))
            and (not self.psend or (self.pswend and self.pend))
            and (not self.pswend or self.pwend)
            and (not self.pend or self.pwend)
            and (not self.iend or self.pend)
        )

    def as_dict(self) -> dict[str, bool]:
        return {
            "PEnd": self.pend,
            "PwEnd": self.pwend,
            "PsEnd": self.psend,
            "PswEnd": self.pswend,
            "IEnd": self.iend,
            "PAut": self.paut,
        }


def _pairs(f: PartialMap):
    dom = [x for x, y in enumerate(f.entries) if y != UNDEF]
    e = f.entries
    for u in dom:
        for v in dom:
            yield _adj(u, v), e[u], e[v]


def is_pend(f: PartialMap) -> bool:
    return all(_adj(fu, fv) for edge, fu, fv in _pairs(f) if edge)


def is_pwend(f: PartialMap) -> bool:
    return all(_adj(fu, fv) for edge, fu, fv in _pairs(f) if edge and fu != fv)


def is_psend(f: PartialMap) -> bool:
    return all(edge == _adj(fu, fv) for edge, fu, fv in _pairs(f))


def is_pswend(f: PartialMap) -> bool:
    return all((edge and fu != fv) == _adj(fu, fv) for edge, fu, fv in _pairs(f))


def is_iend(f: PartialMap) -> bool:
    return is_injective(f) and is_pend(f)


def is_paut(f: PartialMap) -> bool:
    if not is_injective(f):
        return False
    return is_pend(f) and is_pend(inverse(f))


def classify(g: StarGraph, f: PartialMap) -> ClassFlags:
    if f.n != g.n:
        raise ValueError(f"map on {f.n} vertices does not act on S_{g.n}")
    return ClassFlags(
        pend=is_pend(f),
        pwend=is_pwend(f),
        psend=is_psend(f),
        pswend=is_pswend(f),
        iend=is_iend(f),
        paut=is_paut(f),
    )


def paut_equals_injective_psend(g: StarGraph, f: PartialMap) -> bool:
    flags = classify(g, f)
    return flags.paut == (is_injective(f) and flags.psend)


CLASS_PREDICATES = {
    "PEnd": is_pend,
    "PwEnd": is_pwend,
    "PsEnd": is_psend,
    "PswEnd": is_pswend,
    "IEnd": is_iend,
    "PAut": is_paut,
}
