"""Todd-Coxeter style enumeration of a finitely presented monoid.

Builds the right multiplication table of X*/~R node by node. Every relation
u = v is imposed at every node (which makes the right congruence two-sided),
and coincident nodes are merged with a union-find. When the table closes
the number of live nodes is exactly the order of the presented monoid.
"""

from __future__ import annotations

from dataclasses import dataclass

from .presentation import Presentation

DEFAULT_CAP = 2_000_000


@dataclass(frozen=True)
class Enumeration:
    size: int | None
    defined: int
    status: str  # "closed" or "cap"

    def __bool__(self):
        return self.status == "closed"


def _trie(sides):
    """Prefix trie of all relation sides: list of (letter, child) per node."""
    children: list[dict[int, int]] = [{}]
    ends = []
    for w in sides:
        t = 0
        for x in w:
            nxt = children[t].get(x)
            if nxt is None:
                nxt = len(children)
                children[t][x] = nxt
                children.append({})
            t = nxt
        ends.append(t)
    order = [(t, list(ch.items())) for t, ch in enumerate(children)]
    return order, ends


def tc_enumerate(p: Presentation, cap: int = DEFAULT_CAP) -> Enumeration:
    k = len(p.alphabet)
    idx = {x: i for i, x in enumerate(p.alphabet)}
    rels = [(tuple(idx[x] for x in r.lhs), tuple(idx[x] for x in r.rhs)) for r in p.relations if r.lhs != r.rhs]
    sides = [s for pair in rels for s in pair]
    trie, ends = _trie(sides)
    ntrie = len(trie)

    table: list[int] = [-1] * k
    parent: list[int] = [0]
    live = 1
    queue: list[tuple[int, int]] = []

    def find(a: int) -> int:
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    def merge_all() -> None:
        nonlocal live
        while queue:
            a, b = queue.pop()
            a, b = find(a), find(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            parent[b] = a
            live -= 1
            base_a, base_b = a * k, b * k
            for x in range(k):
                tb = table[base_b + x]
                if tb < 0:
                    continue
                ta = table[base_a + x]
                if ta < 0:
                    table[base_a + x] = tb
                else:
                    queue.append((ta, tb))

    def define(node: int, x: int) -> int:
        nonlocal live
        new = len(parent)
        parent.append(new)
        table.extend([-1] * k)
        table[node * k + x] = new
        live += 1
        return new

    at = [0] * ntrie
    i = 0
    while i < len(parent):
        if find(i) != i:
            i += 1
            continue
        # walk the trie from node i, defining missing edges as needed
        at[0] = i
        for t, kids in trie:
            src = find(at[t])
            at[t] = src
            for x, child in kids:
                tgt = table[src * k + x]
                if tgt < 0:
                    tgt = define(src, x)
                at[child] = tgt
            if live > cap:
                return Enumeration(None, len(parent), "cap")
        for r in range(len(rels)):
            a, b = at[ends[2 * r]], at[ends[2 * r + 1]]
            if a != b:
                queue.append((a, b))
        merge_all()
        if find(i) == i:
            base = i * k
            for x in range(k):
                if table[base + x] < 0:
                    define(i, x)
        if live > cap:
            return Enumeration(None, len(parent), "cap")
        i += 1
    return Enumeration(live, len(parent), "closed")
