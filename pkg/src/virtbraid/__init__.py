"""Word problem solver for virtual braid groups via condensed curve diagrams."""

from .cvcd import CVcd, canonical_serialize, condense, expand, parse_condensed
from .solver import are_equal, invariant_report, is_trivial, quick_nontriviality
from .word import BraidWord, parse_word, render

__all__ = [
    "BraidWord", "CVcd", "are_equal", "canonical_serialize", "condense",
    "expand", "invariant_report", "is_trivial", "parse_condensed",
    "parse_word", "quick_nontriviality", "render",
]
