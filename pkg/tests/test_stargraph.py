import itertools

import pytest
from hypothesis import given

from starmonoid.ptrans import UNDEF, PartialMap, all_partial_maps
from starmonoid.stargraph import (
    StarGraph,
    adjacent,
    classify,
    is_paut,
    is_pend,
    is_psend,
    is_pwend,
    paut_equals_injective_psend,
)

from conftest import partial_maps


def _edge(u, v):
    return u != v and 0 in (u, v)


def _defined_pairs(f):
    dom = [x for x, y in enumerate(f.entries) if y != UNDEF]
    return [(u, v, f.entries[u], f.entries[v]) for u, v in itertools.product(dom, dom)]


def test_edges():
    g = StarGraph(4)
    assert set(g.edges()) == {frozenset({0, i}) for i in (1, 2, 3)}
    assert adjacent(g, 0, 2) and adjacent(g, 3, 0)
    assert not adjacent(g, 1, 2) and not adjacent(g, 0, 0)


def test_hand_examples():
    # every leaf to the center: edges 0-i map to 0-0, not an edge
    collapse = PartialMap((0, 0, 0, 0))
    assert not is_pend(collapse) and is_pwend(collapse)
    # the swap of center and one leaf keeps the edge 0-1 only when nothing else is defined
    assert is_paut(PartialMap((1, 0, UNDEF, UNDEF)))
    assert not is_pend(PartialMap((1, 0, 2, UNDEF)))
    # the empty map is in every class
    assert all(classify(StarGraph(4), PartialMap((UNDEF,) * 4)).as_dict().values())


@given(partial_maps(min_n=3, max_n=5))
def test_predicates_match_definitions(f):
    pairs = _defined_pairs(f)
    pend = all(_edge(a, b) for u, v, a, b in pairs if _edge(u, v))
    pwend = all(_edge(a, b) or a == b for u, v, a, b in pairs if _edge(u, v))
    psend = all(_edge(u, v) == _edge(a, b) for u, v, a, b in pairs)
    flags = classify(StarGraph(f.n), f)
    assert (flags.pend, flags.pwend, flags.psend) == (pend, pwend, psend)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_hasse_implications_exhaustive(n):
    g = StarGraph(n)
    for f in all_partial_maps(n):
        assert classify(g, f).implications_hold()
        assert paut_equals_injective_psend(g, f)


def test_psend_not_pend_does_not_exist():
    assert all(is_pend(f) for f in all_partial_maps(4) if is_psend(f))
