"""Equality of words in a presented group, dispatched on the presentation kind."""

from __future__ import annotations

import enum

from . import nilpotent, solvable
from .errors import RankMismatch
from .groups import evaluate_word
from .presentation import Explicit, FiniteKind, Free, FreeNilpotent, FreeSolvable, Presentation
from .words import Word, free_reduce


class Verdict(enum.Enum):
    EQUAL = "Equal"
    NOT_EQUAL = "NotEqual"
    UNDECIDABLE = "Undecidable"

    def __str__(self):
        return self.value


def _compact(w1: Word, w2: Word) -> tuple[int, Word, Word]:
    """Relabel the generators actually used to 0..k-1.

    Free nilpotent and free solvable groups on a subset of the generators
    are retracts of the whole group, so equality can be decided there.
    """
    used = sorted({g for g, _ in w1.letters} | {g for g, _ in w2.letters})
    relabel = {g: k for k, g in enumerate(used)}

    def move(w):
        return Word(tuple((relabel[g], e) for g, e in w.letters))

    return len(used), move(w1), move(w2)


def words_equal(presentation: Presentation, w1: Word, w2: Word) -> Verdict:
    n = presentation.num_generators
    for w in (w1, w2):
        if w.max_generator() >= n:
            raise RankMismatch(f"word {w} uses generator {w.max_generator()} but the presentation has {n}")
    kind = presentation.kind
    if isinstance(kind, Explicit):
        # no solver: even freely equal words are reported as undecidable
        return Verdict.UNDECIDABLE
    if not free_reduce(w1.inverse() * w2):
        return Verdict.EQUAL
    if isinstance(kind, Free):
        return Verdict.NOT_EQUAL
    if isinstance(kind, FiniteKind):
        x = evaluate_word(kind.group, w1, kind.images)
        y = evaluate_word(kind.group, w2, kind.images)
        return Verdict.EQUAL if x == y else Verdict.NOT_EQUAL
    if isinstance(kind, FreeNilpotent):
        rank, a, b = _compact(w1, w2)
        basis = nilpotent.hall_basis(rank, kind.nilpotency_class)
        same = nilpotent.collect(a, basis) == nilpotent.collect(b, basis)
        return Verdict.EQUAL if same else Verdict.NOT_EQUAL
    if isinstance(kind, FreeSolvable):
        rank, a, b = _compact(w1, w2)
        same = solvable.image(a, rank, kind.derived_length) == solvable.image(b, rank, kind.derived_length)
        return Verdict.EQUAL if same else Verdict.NOT_EQUAL
    raise TypeError(f"unknown presentation kind {kind!r}")


def is_identity(presentation: Presentation, w: Word) -> Verdict:
    return words_equal(presentation, w, Word())
