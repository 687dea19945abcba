"""Partial transformations of {0, ..., n-1}.

Maps compose left to right, matching the image-on-the-right notation
x(fg) = (xf)g: ``compose(f, g)`` applies ``f`` first.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

UNDEF = -1


class PartialMap:
    """An immutable partial map on {0, ..., n-1}.

    ``entries[x]`` is the image of ``x``, or ``UNDEF`` when ``x`` is outside
    the domain.
    """

    __slots__ = ("entries", "_hash")

    def __init__(self, entries: Iterable[int]):
        entries = tuple(entries)
        n = len(entries)
        if n < 1:
            raise ValueError("a partial map needs at least one vertex")
        for y in entries:
            if y != UNDEF and not 0 <= y < n:
                raise ValueError(f"image {y} out of range for n={n}")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_hash", hash(entries))

    @classmethod
    def _raw(cls, entries: tuple) -> "PartialMap":
        # skips validation; callers guarantee a well formed tuple
        self = object.__new__(cls)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_hash", hash(entries))
        return self

    @classmethod
    def from_dict(cls, n: int, mapping: dict[int, int]) -> "PartialMap":
        entries = [UNDEF] * n
        for x, y in mapping.items():
            entries[x] = y
        return cls(entries)

    def __setattr__(self, name, value):
        raise AttributeError("PartialMap is immutable")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, PartialMap):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "PartialMap") -> bool:
        return self.entries < other.entries

    def __mul__(self, other: "PartialMap") -> "PartialMap":
        return compose(self, other)

    def __call__(self, x: int) -> int:
        return self.entries[x]

    def __repr__(self):
        pairs = ",".join(f"{x}->{y}" for x, y in enumerate(self.entries) if y != UNDEF)
        return f"PartialMap[{pairs}]"

    def __str__(self):
        return to_text(self)

    def __reduce__(self):
        return (PartialMap, (self.entries,))


def identity(n: int) -> PartialMap:
    if n < 1:
        raise ValueError("n must be at least 1")
    return PartialMap._raw(tuple(range(n)))


def empty_map(n: int) -> PartialMap:
    return PartialMap._raw((UNDEF,) * n)


def compose_entries(f: tuple, g: tuple) -> tuple:
    """Left-to-right composition on raw entry tuples.

    The trailing ``UNDEF`` makes ``ext[UNDEF]`` (index -1) resolve to ``UNDEF``.
    """
    ext = g + (UNDEF,)
    return tuple([ext[x] for x in f])


def compose(f: PartialMap, g: PartialMap) -> PartialMap:
    if len(f.entries) != len(g.entries):
        raise ValueError(f"cannot compose maps on {f.n} and {g.n} vertices")
    return PartialMap._raw(compose_entries(f.entries, g.entries))


def domain(f: PartialMap) -> frozenset[int]:
    return frozenset(x for x, y in enumerate(f.entries) if y != UNDEF)


def image(f: PartialMap) -> frozenset[int]:
    return frozenset(y for y in f.entries if y != UNDEF)


def rank(f: PartialMap) -> int:
    return len(image(f))


def is_injective(f: PartialMap) -> bool:
    defined = [y for y in f.entries if y != UNDEF]
    return len(defined) == len(set(defined))


def is_total(f: PartialMap) -> bool:
    return UNDEF not in f.entries


def is_partial_identity(f: PartialMap) -> bool:
    return all(y == UNDEF or y == x for x, y in enumerate(f.entries))


def restrict(f: PartialMap, keep: Iterable[int]) -> PartialMap:
    keep = set(keep)
    return PartialMap._raw(tuple(y if x in keep else UNDEF for x, y in enumerate(f.entries)))


def partial_identity(n: int, dom: Iterable[int]) -> PartialMap:
    return restrict(identity(n), dom)


def inverse(f: PartialMap) -> PartialMap:
    """Inverse of an injective partial map."""
    if not is_injective(f):
        raise ValueError("only injective partial maps have an inverse")
    entries = [UNDEF] * f.n
    for x, y in enumerate(f.entries):
        if y != UNDEF:
            entries[y] = x
    return PartialMap._raw(tuple(entries))


def zeta(f: PartialMap) -> PartialMap:
    """Force 0 -> 0, keeping the rest of ``f`` (its old value at 0 is dropped)."""
    return PartialMap._raw((0,) + f.entries[1:])


def compose_all(maps: Sequence[PartialMap], n: int) -> PartialMap:
    out = identity(n).entries
    for m in maps:
        out = compose_entries(out, m.entries)
    return PartialMap._raw(out)


def to_text(f: PartialMap) -> str:
    """Two-row form ``(dom / img)``, undefined columns omitted."""
    dom = [x for x, y in enumerate(f.entries) if y != UNDEF]
    img = [f.entries[x] for x in dom]
    return "(" + " ".join(map(str, dom)) + " / " + " ".join(map(str, img)) + ")"


_TEXT_RE = re.compile(r"^\(\s*([\d\s]*?)\s*/\s*([\d\s]*?)\s*\)$")


def from_text(text: str, n: int) -> PartialMap:
    m = _TEXT_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a two-row partial map: {text!r}")
    dom = [int(t) for t in m.group(1).split()]
    img = [int(t) for t in m.group(2).split()]
    if len(dom) != len(img):
        raise ValueError(f"rows differ in length: {text!r}")
    if len(set(dom)) != len(dom):
        raise ValueError(f"repeated domain point: {text!r}")
    for x in dom:
        if not 0 <= x < n:
            raise ValueError(f"domain point {x} out of range for n={n}")
    return PartialMap.from_dict(n, dict(zip(dom, img)))


def all_partial_maps(n: int):
    """Every partial map on {0, ..., n-1}; there are (n+1)**n of them."""
    from itertools import product

    values = (UNDEF,) + tuple(range(n))
    for entries in product(values, repeat=n):
        yield PartialMap._raw(entries)
