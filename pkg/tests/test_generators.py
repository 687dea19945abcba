import pytest

from starmonoid.generators import (
    GENERATING_SETS,
    QSeq,
    generating_set,
    is_generator_name,
    make,
    sigma,
)
from starmonoid.ptrans import UNDEF, PartialMap, from_text, is_injective
from starmonoid.stargraph import CLASS_PREDICATES

N = 5


def test_leaf_generators():
    assert make("a", N) == from_text("(1 2 3 4 / 2 1 3 4)", N)
    assert make("b", N) == from_text("(1 2 3 4 / 2 3 4 1)", N)
    assert make("e", N) == from_text("(1 2 3 4 / 1 1 3 4)", N)
    assert make("f", N) == from_text("(2 3 4 / 2 3 4)", N)
    assert make("a0", N) == from_text("(0 1 2 3 4 / 0 2 1 3 4)", N)


def test_special_generators():
    assert make("c", N) == from_text("(1 2 3 4 / 0 2 3 4)", N)
    assert make("c0", N) == from_text("(0 1 2 3 4 / 0 0 2 3 4)", N)
    assert make("d", N) == from_text("(1 2 3 4 / 1 2 3 4)", N)
    assert make("z", N) == from_text("(0 1 2 3 4 / 1 0 0 0 0)", N)
    assert make("z0", N) == from_text("(0 1 2 3 4 / 0 0 0 0 0)", N)
    assert make("e1", N) == from_text("(0 1 2 3 / 0 1 2 3)", N)
    assert make("z1", N) == from_text("(0 1 / 1 0)", N)


def test_sigma():
    assert sigma(1, N) == from_text("(0 1 2 3 4 / 0 1 2 3 4)", N)
    assert sigma(3, N) == from_text("(0 1 2 3 4 / 0 3 1 2 4)", N)
    with pytest.raises(ValueError):
        sigma(5, N)


def test_primed_generators_fix_center_and_first_leaf():
    for name in ("a0p", "b0p", "e0p", "f0p"):
        g = make(name, N)
        assert g.entries[0] == 0 and g.entries[1] == 1
    with pytest.raises(ValueError):
        make("a0p", 3)


@pytest.mark.parametrize("bad", ["q", "sigma_x", "a1"])
def test_unknown_names(bad):
    assert not is_generator_name(bad)
    with pytest.raises(ValueError):
        make(bad, N)


def test_generators_need_n3():
    with pytest.raises(ValueError):
        make("a", 2)


@pytest.mark.parametrize("cls", ["PsEnd", "PswEnd", "PEnd", "PwEnd", "PAut", "IEnd"])
def test_generators_lie_in_their_class(cls):
    pred = CLASS_PREDICATES[cls]
    for _, g in generating_set(cls, N):
        assert pred(g)


def test_generating_set_letters():
    assert GENERATING_SETS["PEnd"] == ("a0", "b0", "e0", "f0", "c", "d", "z")
    assert GENERATING_SETS["IEnd"] == ("a0", "b0", "e1", "c", "d", "z1")


def test_qseq_validation():
    q = QSeq((1, 2, 3), (2, 4))
    assert q.k == 2
    q.validate(5)
    with pytest.raises(ValueError):
        QSeq((1, 1, 3), (2, 4)).validate(5)
