import pytest

from starmonoid.enumeration import card_formula, generate_class
from starmonoid.families import FAMILY_OF, expected_size, family_W, family_for
from starmonoid.generators import assignment
from starmonoid.presentation import EMPTY, parse_word
from starmonoid.verify import check_relations
from starmonoid.words import (
    Evaluator,
    default_R0,
    presentation_for,
    relations_R1,
    relations_R_paut,
    relations_Rbar,
    w_A_word,
)
from starmonoid.ptrans import partial_identity

CLASSES = ["2PT", "PsEnd", "PswEnd", "PEnd", "PwEnd", "PAut", "IEnd"]


@pytest.mark.parametrize("n", [4, 5])
@pytest.mark.parametrize("cls", CLASSES)
def test_relations_hold(cls, n):
    p = presentation_for(cls, n)
    assert check_relations(p, assignment(p.alphabet, n))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_relation_counts(n):
    assert len(relations_R_paut(n)) == 3 * n + 9
    assert len(relations_Rbar(n)) == 3 * n + 19


def test_presentations_need_n4():
    with pytest.raises(ValueError):
        presentation_for("PsEnd", 3)


def test_R1_extends_R0():
    r0 = default_R0(4)
    r1 = relations_R1(4)
    assert r1.relations[: len(r0)] == r0.relations
    assert len(r1) == len(r0) + 4


def test_wA_words():
    ev = Evaluator(5)
    assert w_A_word({1, 2, 3, 4}, 5) == EMPTY
    for leaves in ({1}, {2, 4}, {1, 3, 4}):
        assert ev(w_A_word(leaves, 5)) == partial_identity(5, {0} | leaves)


def test_evaluator():
    ev = Evaluator(4)
    assert ev(parse_word("a0 a0")) == ev(EMPTY)
    assert ev(parse_word("b0^3")) == ev(EMPTY)


@pytest.mark.parametrize("n", [4, 5])
@pytest.mark.parametrize("cls", CLASSES)
def test_family_bijects_onto_monoid(cls, n):
    f = family_for(cls, n)
    m = generate_class(cls, n)
    gens = m.assignment()
    ev = Evaluator(n)
    values = {ev(w) for w in f}
    assert EMPTY in f
    assert len(values) == len(f) == len(m)
    assert values == m.element_set()
    assert all(set(w) <= set(gens) for w in f)


@pytest.mark.parametrize("n", [4, 5])
@pytest.mark.parametrize("tag", ["W2PT", "Ws", "Wsw", "Wc", "Ww", "WA", "WI"])
def test_family_sizes(tag, n):
    assert len(family_W(tag, n)) == expected_size(tag, n)


def test_family_parts():
    ws = family_W("Ws", 4)
    # W0, W1 have 4^3 words each; W2 (n-1)(2^(n-1)-1); W3 2^(n-1)-1; W4 n-1
    assert ws.parts == {"W0": 64, "W1": 64, "W2": 21, "W3": 7, "W4": 3}
    assert len(ws) == card_formula("PsEnd", 4)


def test_family_of_covers_classes():
    assert set(FAMILY_OF) == set(CLASSES)
