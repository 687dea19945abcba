import pytest
from hypothesis import given
from hypothesis import strategies as st

from starmonoid.presentation import (
    EMPTY,
    Presentation,
    Relation,
    format_presentation,
    format_word,
    load_presentation,
    parse_presentation,
    parse_word,
    pw,
    save_presentation,
    word,
)
from starmonoid.words import presentation_for

letters = st.sampled_from(["a0", "b0", "e0", "f0", "c", "z1"])


@given(st.lists(letters, max_size=20).map(tuple))
def test_word_round_trip(w):
    assert parse_word(format_word(w)) == w


def test_word_syntax():
    assert parse_word("a0 b0^3") == ("a0", "b0", "b0", "b0")
    assert parse_word("(a0 b0)^2 c") == ("a0", "b0", "a0", "b0", "c")
    assert parse_word("1") == EMPTY
    assert format_word(EMPTY) == "1"
    assert format_word(pw("b0", 3)) == "b0^3"
    assert word("a0", pw("f0 b0", 2)) == ("a0", "f0", "b0", "f0", "b0")


def test_unknown_letter():
    with pytest.raises(ValueError):
        parse_word("a0 q", alphabet=("a0",))


def test_relations_must_use_alphabet():
    with pytest.raises(ValueError):
        Presentation(("a",), [Relation(("a", "b"), EMPTY)])


@pytest.mark.parametrize("cls", ["PsEnd", "IEnd"])
def test_presentation_round_trip(cls, tmp_path):
    p = presentation_for(cls, 4)
    text = format_presentation(p)
    assert text.count("\nalphabet:") + text.startswith("alphabet:") == 1
    q = parse_presentation(text)
    assert q.alphabet == p.alphabet
    assert [(r.lhs, r.rhs) for r in q.relations] == [(r.lhs, r.rhs) for r in p.relations]
    path = tmp_path / "p.pres"
    save_presentation(p, path)
    assert [(r.lhs, r.rhs) for r in load_presentation(path).relations] == [(r.lhs, r.rhs) for r in p.relations]
