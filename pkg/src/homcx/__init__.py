"""Exact finite computations with cosimplicial groups and their Hom spaces."""

__version__ = "0.1.0"

from .groups import FiniteGroup, catalog_group, catalog_names, evaluate_word
from .words import Word, parse_word
from .presentation import Explicit, FiniteKind, Free, FreeNilpotent, FreeSolvable, Presentation
from .wordproblem import Verdict, words_equal
from .cosimplicial import Auto, Pointwise, Symbolic, build_standard, parse_family
from .homsets import enumerate_hom
from .homspace import build_space
from .homology import homology, normalized_complex

__all__ = [
    "Auto", "Explicit", "FiniteGroup", "FiniteKind", "Free", "FreeNilpotent", "FreeSolvable", "Pointwise",
    "Presentation", "Symbolic", "Verdict", "Word", "build_space", "build_standard", "catalog_group",
    "catalog_names", "enumerate_hom", "evaluate_word", "homology", "normalized_complex", "parse_family",
    "parse_word", "words_equal",
]
