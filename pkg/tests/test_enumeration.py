import json

import pytest

from starmonoid.enumeration import (
    GRAPH_CLASSES,
    ResourceLimitExceeded,
    bfs_levels,
    card_formula,
    counting_identities,
    generate,
    generate_class,
    predicate_monoid,
    shortest_word_lengths,
    verify_characterization,
)
from starmonoid.generators import make
from starmonoid.ptrans import identity
from starmonoid.words import eval_word

# Sizes at n = 4 worked out by hand from the closed forms,
# e.g. PAut: 1 + 16 + 2(9 + 18 + 6) = 83 and 2PT: 2 * 4^3 = 128.
ANCHORS_N4 = {"PsEnd": 159, "PswEnd": 187, "PEnd": 213, "PwEnd": 331, "PAut": 83, "IEnd": 119, "2PT": 128}


@pytest.mark.parametrize("cls,size", sorted(ANCHORS_N4.items()))
def test_anchor_sizes(cls, size):
    assert card_formula(cls, 4) == size
    assert len(generate_class(cls, 4)) == size
    assert len(predicate_monoid(cls, 4)) == size


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("cls", GRAPH_CLASSES)
def test_three_way_agreement(cls, n):
    gen = generate_class(cls, n)
    assert gen.element_set() == predicate_monoid(cls, n)
    assert len(gen) == card_formula(cls, n)


@pytest.mark.parametrize("cls", GRAPH_CLASSES)
def test_characterizations(cls):
    res = verify_characterization(cls, 4)
    assert res.status == "Verified", res


def test_nf_words_are_shortest_and_evaluate():
    t = generate_class("PEnd", 4)
    assert bfs_levels(t) == shortest_word_lengths(t)
    gens = t.assignment()
    for m, w in zip(t.elements, t.nf_word):
        assert eval_word(w, gens, 4) == m


def test_cayley_table_is_right_multiplication():
    t = generate_class("IEnd", 4)
    gens = [t.assignment()[x] for x in t.gen_names]
    for i, row in enumerate(t.cayley):
        for g, j in enumerate(row):
            assert t.elements[i] * gens[g] == t.elements[j]


def test_element_cap():
    with pytest.raises(ResourceLimitExceeded):
        generate_class("PwEnd", 4, max_elements=100)


def test_trivial_monoid():
    t = generate([identity(3)], ["i"])
    assert len(t) == 1


def test_exports():
    t = generate_class("PAut", 4)
    lines = t.to_csv().splitlines()
    assert len(lines) == 84
    assert lines[0].startswith("index,element,nf_word")
    doc = json.loads(t.to_json())
    assert doc["n"] == 4 and len(doc["elements"]) == 83


@pytest.mark.parametrize("n", [4, 5])
def test_counting_identities(n):
    rows = counting_identities(n)
    assert len(rows) == 2 * (n - 1) + 2
    for name, lhs, rhs in rows:
        assert lhs == rhs, name


def test_q_sequences_match_k0_at_n4():
    rows = dict((name, (lhs, rhs)) for name, lhs, rhs in counting_identities(4))
    assert rows["|Q| = |K_0|"] == (36, 36)


def test_formula_rejects_unknown_class():
    with pytest.raises(ValueError):
        card_formula("Nope", 4)


def test_generated_values_are_generators():
    t = generate_class("PsEnd", 4)
    assert t.assignment()["z"] == make("z", 4)
