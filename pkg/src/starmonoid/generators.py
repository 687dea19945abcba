"""Named transformations of {0, ..., n-1} and the generating sets built from them.

Vertex 0 is the center of the star; Omega = {1, ..., n-1} are the leaves.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .ptrans import PartialMap, partial_identity, zeta

BASE_NAMES = (
    "a", "b", "e", "f",
    "a0", "b0", "e0", "f0",
    "c", "c0", "d", "z", "z0", "e1", "z1",
    "a0p", "b0p", "e0p", "f0p",
)

_SIGMA_RE = re.compile(r"^sigma_(\d+)$")


def sigma_name(k: int) -> str:
    return f"sigma_{k}"


def is_generator_name(name: str) -> bool:
    return name in BASE_NAMES or _SIGMA_RE.match(name) is not None


def _build(n: int, mapping: dict[int, int]) -> PartialMap:
    return PartialMap.from_dict(n, mapping)


def _leaf_maps(name: str, n: int) -> PartialMap:
    leaves = range(1, n)
    if name == "a":
        m = {i: i for i in leaves}
        m[1], m[2] = 2, 1
    elif name == "b":
        m = {i: i + 1 for i in range(1, n - 1)}
        m[n - 1] = 1
    elif name == "e":
        m = {i: i for i in leaves}
        m[2] = 1
    elif name == "f":
        m = {i: i for i in range(2, n)}
    else:  # pragma: no cover
        raise KeyError(name)
    return _build(n, m)


def sigma(k: int, n: int) -> PartialMap:
    """0 -> 0, 1 -> k, i -> i-1 for 2 <= i <= k, fixed above k."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"sigma_k needs 1 <= k <= {n - 1}, got k={k}")
    m = {0: 0, 1: k}
    for i in range(2, k + 1):
        m[i] = i - 1
    for i in range(k + 1, n):
        m[i] = i
    return _build(n, m)


def make(name: str, n: int) -> PartialMap:
    if n < 3:
        raise ValueError(f"generators are defined for n >= 3, got n={n}")
    sm = _SIGMA_RE.match(name)
    if sm:
        return sigma(int(sm.group(1)), n)
    if name in ("a", "b", "e", "f"):
        return _leaf_maps(name, n)
    if name in ("a0", "b0", "e0", "f0"):
        return zeta(_leaf_maps(name[0], n))
    if name == "c":
        m = {1: 0}
        m.update({i: i for i in range(2, n)})
        return _build(n, m)
    if name == "c0":
        return zeta(make("c", n))
    if name == "d":
        return partial_identity(n, range(1, n))
    if name == "z":
        m = {0: 1}
        m.update({i: 0 for i in range(1, n)})
        return _build(n, m)
    if name == "z0":
        return zeta(make("z", n))
    if name == "e1":
        return partial_identity(n, range(0, n - 1))
    if name == "z1":
        return _build(n, {0: 1, 1: 0})
    if name in ("a0p", "b0p", "e0p", "f0p"):
        if n < 4:
            raise ValueError(f"{name} needs n >= 4, got n={n}")
        m = {i: i for i in range(n)}
        if name == "a0p":
            m[2], m[3] = 3, 2
        elif name == "b0p":
            for i in range(2, n - 1):
                m[i] = i + 1
            m[n - 1] = 2
        elif name == "e0p":
            m[3] = 2
        else:
            del m[2]
        return _build(n, m)
    raise ValueError(f"unknown generator {name!r}")


# Target transformations named by the canonical-form constructions.


@dataclass(frozen=True)
class QSeq:
    """(i_0, i_1, ..., i_k | j_1, ..., j_k) with the i's distinct leaves and j's increasing."""

    i: tuple[int, ...]
    j: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.j)

    def validate(self, n: int) -> None:
        k = self.k
        if not 1 <= k <= n - 2:
            raise ValueError(f"QSeq length k={k} outside 1..{n - 2}")
        if len(self.i) != k + 1:
            raise ValueError("QSeq needs k+1 domain points")
        leaves = set(range(1, n))
        if not set(self.i) <= leaves or not set(self.j) <= leaves:
            raise ValueError("QSeq entries must be leaves")
        if len(set(self.i)) != len(self.i):
            raise ValueError("QSeq domain points must be distinct")
        if any(a >= b for a, b in zip(self.j, self.j[1:])):
            raise ValueError("QSeq images must be strictly increasing")

    def jq(self, n: int) -> int:
        return min(set(range(1, n)) - {1, *self.j[1:]})


@dataclass(frozen=True)
class PartialIdentityTarget:
    """id on A together with 0."""

    leaves: frozenset[int]


@dataclass(frozen=True)
class Collapse:
    """0 -> 0 and each listed leaf -> 1."""

    leaves: tuple[int, ...]


@dataclass(frozen=True)
class QPrime:
    q: QSeq


@dataclass(frozen=True)
class QDoublePrime:
    q: QSeq


TargetSpec = Union[PartialIdentityTarget, Collapse, QPrime, QDoublePrime]


def realize(t: TargetSpec, n: int) -> PartialMap:
    if isinstance(t, PartialIdentityTarget):
        a = set(t.leaves)
        if not a or not a <= set(range(1, n)):
            raise ValueError(f"partial identity needs a nonempty set of leaves, got {sorted(a)}")
        return partial_identity(n, a | {0})
    if isinstance(t, Collapse):
        ls = t.leaves
        if not ls or any(x >= y for x, y in zip(ls, ls[1:])) or not set(ls) <= set(range(1, n)):
            raise ValueError(f"collapse needs increasing leaves, got {ls}")
        return _build(n, {0: 0, **{i: 1 for i in ls}})
    if isinstance(t, QPrime):
        q = t.q
        q.validate(n)
        imgs = (1, q.jq(n)) + q.j[1:]
        return _build(n, {0: 0, **dict(zip(q.i, imgs))})
    if isinstance(t, QDoublePrime):
        q = t.q
        q.validate(n)
        src = (q.jq(n),) + q.j[1:]
        return _build(n, {0: 0, **dict(zip(src, q.j))})
    raise TypeError(f"not a target spec: {t!r}")


GENERATING_SETS = {
    "PTzeta": ("a0", "b0", "e0", "f0"),
    "2PT": ("a0", "b0", "e0", "f0", "d"),
    "PsEnd": ("a0", "b0", "e0", "f0", "d", "z"),
    "PswEnd": ("a0", "b0", "e0", "f0", "d", "z", "z0"),
    "PEnd": ("a0", "b0", "e0", "f0", "c", "d", "z"),
    "PwEnd": ("a0", "b0", "e0", "f0", "c0", "d", "z"),
    "Izeta": ("a0", "b0", "e1"),
    "PAut": ("a0", "b0", "e1", "d", "z1"),
    "IEnd": ("a0", "b0", "e1", "c", "d", "z1"),
}


def generating_set(cls: str, n: int) -> list[tuple[str, PartialMap]]:
    try:
        names = GENERATING_SETS[cls]
    except KeyError:
        raise ValueError(f"no generating set for class {cls!r}") from None
    return [(name, make(name, n)) for name in names]


def assignment(names, n: int) -> dict[str, PartialMap]:
    return {name: make(name, n) for name in names}


__all__ = [
    "BASE_NAMES", "QSeq", "PartialIdentityTarget", "Collapse", "QPrime", "QDoublePrime",
    "TargetSpec", "GENERATING_SETS", "make", "sigma", "sigma_name", "realize",
    "generating_set", "assignment",
]
