"""Monoids of partial endomorphisms of the star graph: enumeration,
cardinalities, presentations and their verification."""

__version__ = "0.1.0"

from .enumeration import GRAPH_CLASSES, card_formula, generate_class, predicate_monoid
from .families import family_for, family_W
from .presentation import Presentation, Relation, format_word, parse_word
from .ptrans import PartialMap, compose
from .rewrite import SearchLimits, congruent, kb_complete
from .todd_coxeter import tc_enumerate
from .verify import Verdict, check_relations, guess_and_prove, lemma_suite, verify_presentation
from .words import presentation_for

__all__ = [
    "GRAPH_CLASSES",
    "PartialMap",
    "Presentation",
    "Relation",
    "SearchLimits",
    "Verdict",
    "card_formula",
    "check_relations",
    "compose",
    "congruent",
    "family_W",
    "family_for",
    "format_word",
    "generate_class",
    "guess_and_prove",
    "kb_complete",
    "lemma_suite",
    "parse_word",
    "predicate_monoid",
    "presentation_for",
    "tc_enumerate",
    "verify_presentation",
]
