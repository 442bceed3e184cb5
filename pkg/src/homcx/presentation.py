"""Finite presentations and the tag that says how to decide equality in them."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Callable, Sequence

from .groups import FiniteGroup
from .words import Word, default_names


@dataclass(frozen=True)
class Free:
    def __str__(self):
        return "Free"


@dataclass(frozen=True)
class FreeNilpotent:
    nilpotency_class: int

    def __str__(self):
        return f"FreeNilpotent({self.nilpotency_class})"


@dataclass(frozen=True)
class FreeSolvable:
    derived_length: int

    def __str__(self):
        return f"FreeSolvable({self.derived_length})"


@dataclass(frozen=True, eq=False)
class FiniteKind:
    """The presented group is ``group``; generator ``k`` is ``images[k]``."""

    group: FiniteGroup
    images: tuple[int, ...]

    def __str__(self):
        return f"FiniteKind({self.group.name})"


@dataclass(frozen=True)
class Explicit:
    def __str__(self):
        return "Explicit"


Kind = Free | FreeNilpotent | FreeSolvable | FiniteKind | Explicit


class Presentation:
    """``<generators | relators>`` with a :data:`Kind` tag.

    Relators may be supplied lazily through ``relator_factory``; they are
    generated on first access.
    """

    def __init__(
        self,
        num_generators: int,
        relators: Sequence[Word] | None = None,
        kind: Kind = Explicit(),
        names: Sequence[str] | None = None,
        relator_factory: Callable[[], Sequence[Word]] | None = None,
    ):
        if relators is not None and relator_factory is not None:
            raise ValueError("give relators or relator_factory, not both")
        self.num_generators = int(num_generators)
        self.kind = kind
        self.names = tuple(names) if names is not None else default_names(num_generators)
        if len(self.names) != self.num_generators:
            raise ValueError("one name per generator required")
        self._relators = tuple(relators) if relators is not None else None
        self._factory = relator_factory if relators is None else None
        if self._relators is None and self._factory is None:
            self._relators = ()
        if self._relators is not None:
            self._validate(self._relators)
        if isinstance(kind, Free) and self._relators:
            raise ValueError("a Free presentation has no relators")

    def _validate(self, relators):
        for r in relators:
            if r.max_generator() >= self.num_generators:
                raise ValueError(f"relator {r} uses a generator outside 0..{self.num_generators - 1}")

    @property
    def relators(self) -> tuple[Word, ...]:
        if self._relators is None:
            rels = tuple(self._factory())
            self._validate(rels)
            self._relators = rels
        return self._relators

    @property
    def decidable(self) -> bool:
        return not isinstance(self.kind, Explicit)

    def fingerprint(self) -> str:
        payload = {
            "n": self.num_generators,
            "kind": str(self.kind),
            "relators": [list(map(list, r.letters)) for r in self.relators],
        }
        if isinstance(self.kind, FiniteKind):
            payload["group"] = self.kind.group.fingerprint
            payload["images"] = list(self.kind.images)
        return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()

    def format_word(self, word: Word) -> str:
        return word.format(self.names)

    def __repr__(self):
        rels = "?" if self._relators is None else len(self._relators)
        return f"Presentation({self.num_generators} gens, {rels} relators, {self.kind})"
