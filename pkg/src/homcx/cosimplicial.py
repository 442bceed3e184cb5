"""Cosimplicial groups given level-wise by presentations.

A coface ``coface(n, i)`` is the homomorphism ``L_{n-1} -> L_n`` and a
codegeneracy ``codegeneracy(n, i)`` is ``L_{n+1} -> L_n``; both are stored
as the images of the source generators.  Levels and maps are built lazily
and memoised.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import (
    CocycleNotVerified,
    CommutationFailure,
    ConfigError,
    IdentityViolation,
    LevelOutOfRange,
    UndecidableLevel,
    UnsupportedFamilyParameter,
)
from .groups import FiniteGroup, catalog_group, catalog_names, evaluate_word_batch
from .homsets import DEFAULT_BUDGET, enumerate_hom
from .presentation import Explicit, FiniteKind, Free, FreeNilpotent, FreeSolvable, Presentation
from .wordproblem import Verdict, words_equal
from .words import Word, commutator, default_names, left_normed, parse_word


# ---------------------------------------------------------------- maps

@dataclass(frozen=True, eq=False)
class GeneratorMap:
    source: Presentation
    target: Presentation
    images: tuple[Word, ...]
    label: str = ""

    def __post_init__(self):
        if len(self.images) != self.source.num_generators:
            raise ValueError(f"{self.label or 'map'}: need {self.source.num_generators} images, got {len(self.images)}")
        for w in self.images:
            if w.max_generator() >= self.target.num_generators:
                raise ValueError(f"{self.label or 'map'}: image {w} leaves the target generators")

    def apply(self, word: Word) -> Word:
        return word.substitute(self.images)

    def then(self, other: GeneratorMap) -> GeneratorMap:
        """``other ∘ self``: apply this map first."""
        label = f"{other.label}∘{self.label}" if self.label and other.label else ""
        return GeneratorMap(self.source, other.target, tuple(other.apply(w) for w in self.images), label)


def identity_map(p: Presentation) -> GeneratorMap:
    return GeneratorMap(p, p, tuple(Word.gen(k) for k in range(p.num_generators)), "id")


class CosimplicialGroup:
    def __init__(
        self,
        descriptor: str,
        level: Callable[[int], Presentation],
        coface: Callable[[int, int], Sequence[Word]],
        codegeneracy: Callable[[int, int], Sequence[Word]],
        truncation: int | None = None,
    ):
        self.descriptor = descriptor
        self.truncation = truncation
        self._level_fn, self._coface_fn, self._codeg_fn = level, coface, codegeneracy
        self._levels: dict[int, Presentation] = {}
        self._maps: dict[tuple, GeneratorMap] = {}

    def __repr__(self):
        return f"CosimplicialGroup({self.descriptor!r})"

    def _check_level(self, n: int):
        if n < 0 or (self.truncation is not None and n > self.truncation):
            top = "unbounded" if self.truncation is None else self.truncation
            raise LevelOutOfRange(f"{self.descriptor}: level {n} outside 0..{top}")

    def level(self, n: int) -> Presentation:
        self._check_level(n)
        if n not in self._levels:
            self._levels[n] = self._level_fn(n)
        return self._levels[n]

    def coface(self, n: int, i: int) -> GeneratorMap:
        """d^i : L_{n-1} -> L_n, 0 <= i <= n."""
        if n < 1 or not 0 <= i <= n:
            raise LevelOutOfRange(f"coface d^{i} into level {n} does not exist")
        key = ("d", n, i)
        if key not in self._maps:
            self._maps[key] = GeneratorMap(
                self.level(n - 1), self.level(n), tuple(self._coface_fn(n, i)), f"d^{i}[{n}]"
            )
        return self._maps[key]

    def codegeneracy(self, n: int, i: int) -> GeneratorMap:
        """s^i : L_{n+1} -> L_n, 0 <= i <= n."""
        if n < 0 or not 0 <= i <= n:
            raise LevelOutOfRange(f"codegeneracy s^{i} onto level {n} does not exist")
        key = ("s", n, i)
        if key not in self._maps:
            self._maps[key] = GeneratorMap(
                self.level(n + 1), self.level(n), tuple(self._codeg_fn(n, i)), f"s^{i}[{n}]"
            )
        return self._maps[key]


@dataclass(eq=False)
class CosimplicialMorphism:
    source: CosimplicialGroup
    target: CosimplicialGroup
    level_map: Callable[[int], GeneratorMap]
    _cache: dict = field(default_factory=dict, repr=False)

    def at(self, n: int) -> GeneratorMap:
        if n not in self._cache:
            self._cache[n] = self.level_map(n)
        return self._cache[n]


# ---------------------------------------------------------------- checking modes

@dataclass(frozen=True)
class Symbolic:
    def __str__(self):
        return "symbolic"


@dataclass(frozen=True, eq=False)
class Pointwise:
    groups: tuple[FiniteGroup, ...]
    budget: int = DEFAULT_BUDGET

    def __str__(self):
        return "pointwise"


@dataclass(frozen=True, eq=False)
class Auto:
    """Symbolic, falling back to pointwise where the word problem is undecidable."""

    groups: tuple[FiniteGroup, ...]
    budget: int = DEFAULT_BUDGET

    def __str__(self):
        return "auto"


Mode = Symbolic | Pointwise | Auto


def default_catalog(max_order: int = 24) -> tuple[FiniteGroup, ...]:
    return tuple(catalog_group(name) for name in catalog_names(max_order))


@dataclass
class Outcome:
    verdict: Verdict
    how: str  # "symbolic" or "pointwise"
    witness: dict | None = None


class Judge:
    """Decides batches of word equalities ``w1 = w2`` in a presentation."""

    def __init__(self, mode: Mode):
        self.mode = mode
        self._homsets: dict[tuple[int, str], tuple[Presentation, object]] = {}

    def _homset(self, p: Presentation, g: FiniteGroup):
        key = (id(p), g.fingerprint)
        hit = self._homsets.get(key)
        if hit is None:
            hit = (p, enumerate_hom(p, g, budget=self.mode.budget))
            self._homsets[key] = hit
        return hit[1]

    def pointwise(self, p: Presentation, pairs: Sequence[tuple[Word, Word]]) -> Outcome:
        for g in self.mode.groups:
            hs = self._homset(p, g)
            if not len(hs):
                continue
            for k, (w1, w2) in enumerate(pairs):
                x = evaluate_word_batch(g, w1, hs.tuples)
                y = evaluate_word_batch(g, w2, hs.tuples)
                bad = np.flatnonzero(x != y)
                if len(bad):
                    return Outcome(
                        Verdict.NOT_EQUAL,
                        "pointwise",
                        {"pair": k, "group": g.name, "tuple": hs.tuples[bad[0]].tolist()},
                    )
        return Outcome(Verdict.EQUAL, "pointwise")

    def compare(self, p: Presentation, pairs: Sequence[tuple[Word, Word]]) -> Outcome:
        if isinstance(self.mode, Pointwise):
            return self.pointwise(p, pairs)
        undecided = []
        for k, (w1, w2) in enumerate(pairs):
            v = words_equal(p, w1, w2)
            if v is Verdict.NOT_EQUAL:
                return Outcome(v, "symbolic", {"pair": k})
            if v is Verdict.UNDECIDABLE:
                undecided.append((w1, w2))
        if not undecided:
            return Outcome(Verdict.EQUAL, "symbolic")
        if isinstance(self.mode, Auto):
            return self.pointwise(p, undecided)
        return Outcome(Verdict.UNDECIDABLE, "symbolic")

    def maps_agree(self, f: GeneratorMap, g: GeneratorMap) -> Outcome:
        return self.compare(f.target, list(zip(f.images, g.images)))


# ---------------------------------------------------------------- standard families

def _free_coface(n: int, i: int) -> list[Word]:
    out = []
    for j in range(1, n):  # source generators a_1 .. a_{n-1}
        if i == 0:
            out.append(Word.gen(j))
        elif i == n or j < i:
            out.append(Word.gen(j - 1))
        elif j == i:
            out.append(Word(((j - 1, 1), (j, 1))))
        else:
            out.append(Word.gen(j))
    return out


def _free_codegeneracy(n: int, i: int) -> list[Word]:
    out = []
    for j in range(1, n + 2):  # source generators a_1 .. a_{n+1}
        if j <= i:
            out.append(Word.gen(j - 1))
        elif j == i + 1:
            out.append(Word())
        else:
            out.append(Word.gen(j - 2))
    return out


def _freebar_coface(n: int, i: int) -> list[Word]:
    return [Word.gen(j if j < i else j + 1) for j in range(n)]


def _freebar_codegeneracy(n: int, i: int) -> list[Word]:
    return [Word.gen(j if j <= i else j - 1) for j in range(n + 2)]


def gamma_relators(n: int, q: int) -> list[Word]:
    """Left-normed weight-q commutators in a_1..a_n, pruned and deduplicated."""
    if q < 2:
        raise UnsupportedFamilyParameter(f"weight q must be >= 2, got {q}")
    out, seen = [], set()
    for idx in itertools.product(range(n), repeat=q):
        if idx[0] == idx[1]:
            continue
        w = left_normed([Word.gen(i) for i in idx])
        if not w or w in seen or w.inverse() in seen:
            continue
        seen.add(w)
        out.append(w)
    return out


def derived_relators(n: int, q: int, conjugator_length: int = 1) -> list[Word]:
    """Normal generators approximating F^(q): iterated commutators [x, y^v].

    Stage 1 is ``[a_i, a_j]`` (i < j); stage k+1 pairs stage-k words with
    conjugators ``v`` of length at most ``conjugator_length``.
    """
    if q < 1:
        raise UnsupportedFamilyParameter(f"derived length must be >= 1, got {q}")
    conj = [Word()]
    letters = [Word.gen(g, e) for g in range(n) for e in (1, -1)]
    frontier = [Word()]
    for _ in range(conjugator_length):
        frontier = [w * x for w in frontier for x in letters if len(w * x) == len(w) + 1]
        conj.extend(frontier)
    stage = [commutator(Word.gen(i), Word.gen(j)) for i in range(n) for j in range(i + 1, n)]
    for _ in range(q - 1):
        nxt, seen = [], set()
        for x in stage:
            for y in stage:
                for v in conj:
                    w = commutator(x, v.inverse() * y * v)
                    if not w or w in seen or w.inverse() in seen:
                        continue
                    seen.add(w)
                    nxt.append(w)
        stage = nxt
    return stage


def _free(n):
    return Presentation(n, kind=Free())


def build_standard(descriptor: str) -> CosimplicialGroup:
    """``free | freebar | gamma:q | derived:q | sigma23 | sigma23:involutive``."""
    head, _, arg = descriptor.partition(":")
    if head == "free" and not arg:
        return CosimplicialGroup("free", _free, _free_coface, _free_codegeneracy)
    if head == "freebar" and not arg:
        return CosimplicialGroup(
            "freebar",
            lambda n: Presentation(n + 1, kind=Free(), names=default_names(n + 1, first=0)),
            _freebar_coface,
            _freebar_codegeneracy,
        )
    if head in ("gamma", "derived"):
        try:
            q = int(arg)
        except ValueError:
            raise ConfigError(f"family {descriptor!r}: expected an integer parameter") from None
        if q < 2:
            raise UnsupportedFamilyParameter(f"family {descriptor!r}: q must be >= 2")
        if head == "gamma":
            def level(n, q=q):
                return Presentation(n, kind=FreeNilpotent(q - 1), relator_factory=lambda: gamma_relators(n, q))
        else:
            def level(n, q=q):
                return Presentation(n, kind=FreeSolvable(q), relator_factory=lambda: derived_relators(n, q))
        return CosimplicialGroup(descriptor, level, _free_coface, _free_codegeneracy)
    if head == "sigma23" and arg in ("", "involutive"):
        return _sigma23(involutive=arg == "involutive")
    raise ConfigError(f"unknown family descriptor {descriptor!r}")


def _sigma23(involutive: bool) -> CosimplicialGroup:
    """Truncated at level 2: S_2, S_3, then <a, b, c | a^2=b^2=c^2, braid relations>.

    The ``involutive`` variant also imposes a^2 = e.
    """
    sym2, sym3 = catalog_group("sym:2"), catalog_group("sym:3")
    images1 = (sym3.index_of((1, 0, 2)), sym3.index_of((0, 2, 1)))
    t = s1 = a = Word.gen(0)
    s2 = b = Word.gen(1)
    c = Word.gen(2)

    def braid(x, y):
        return x * y * x * (y * x * y).inverse()

    rel2 = [a**2 * (c**2).inverse(), b**2 * (c**2).inverse(), braid(a, b), braid(a, c), braid(b, c)]
    if involutive:
        rel2.append(a**2)
    levels = {
        0: Presentation(1, [t**2], FiniteKind(sym2, (1,)), names=("t",)),
        1: Presentation(2, [s1**2, s2**2, (s1 * s2) ** 3], FiniteKind(sym3, images1), names=("s1", "s2")),
        2: Presentation(3, rel2, Explicit(), names=("a", "b", "c")),
    }
    cofaces = {
        (1, 0): [s2], (1, 1): [s1],
        (2, 0): [a, b], (2, 1): [c, b], (2, 2): [c, a],
    }
    codegens = {
        (0, 0): [t, t],
        (1, 0): [s1, s2, s1], (1, 1): [s2, s2, s1],
    }
    name = "sigma23:involutive" if involutive else "sigma23"
    return CosimplicialGroup(name, levels.__getitem__, lambda n, i: cofaces[n, i], lambda n, i: codegens[n, i], 2)


# ---------------------------------------------------------------- identities

def cosimplicial_identities(L: CosimplicialGroup, n_max: int) -> Iterable[tuple[str, GeneratorMap, GeneratorMap]]:
    """Both sides of every cosimplicial identity whose levels are all <= n_max."""
    for m in range(1, n_max):
        for j in range(m + 2):
            for i in range(j):
                yield (
                    f"d^{j}d^{i} = d^{i}d^{j - 1} (L{m - 1}->L{m + 1})",
                    L.coface(m, i).then(L.coface(m + 1, j)),
                    L.coface(m, j - 1).then(L.coface(m + 1, i)),
                )
        for i in range(m + 1):
            for j in range(min(i, m)):
                yield (
                    f"s^{j}s^{i} = s^{i - 1}s^{j} (L{m + 1}->L{m - 1})",
                    L.codegeneracy(m, i).then(L.codegeneracy(m - 1, j)),
                    L.codegeneracy(m, j).then(L.codegeneracy(m - 1, i - 1)),
                )
    for m in range(1, n_max + 1):
        for i in range(m + 1):
            for j in range(m):
                lhs = L.coface(m, i).then(L.codegeneracy(m - 1, j))
                if i < j:
                    rhs, tag = L.codegeneracy(m - 2, j - 1).then(L.coface(m - 1, i)), f"d^{i}s^{j - 1}"
                elif i in (j, j + 1):
                    rhs, tag = identity_map(L.level(m - 1)), "id"
                else:
                    rhs, tag = L.codegeneracy(m - 2, j).then(L.coface(m - 1, i - 1)), f"d^{i - 1}s^{j}"
                yield f"s^{j}d^{i} = {tag} (L{m - 1}->L{m - 1})", lhs, rhs


@dataclass
class IdentityReport:
    family: str
    n_max: int
    mode: str
    checked: int = 0
    symbolic: int = 0
    pointwise: int = 0
    undecidable: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.undecidable

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n_max": self.n_max,
            "mode": self.mode,
            "checked": self.checked,
            "decided_symbolically": self.symbolic,
            "decided_pointwise": self.pointwise,
            "undecidable": self.undecidable,
        }


def verify_cosimplicial_identities(
    L: CosimplicialGroup, n_max: int, mode: Mode = Symbolic(), strict: bool = True
) -> IdentityReport:
    """Check every identity up to ``n_max``; a failing identity raises.

    Identities that symbolic mode cannot decide are listed in the report, or
    raise :class:`UndecidableLevel` when ``strict``.
    """
    if L.truncation is not None and n_max > L.truncation:
        raise LevelOutOfRange(f"{L.descriptor} is truncated at level {L.truncation}")
    judge = Judge(mode)
    report = IdentityReport(L.descriptor, n_max, str(mode))
    for label, lhs, rhs in cosimplicial_identities(L, n_max):
        report.checked += 1
        out = judge.maps_agree(lhs, rhs)
        if out.verdict is Verdict.NOT_EQUAL:
            k = out.witness["pair"]
            names = lhs.target.names
            raise IdentityViolation(
                f"{L.descriptor}: {label} fails on generator {lhs.source.names[k]}",
                witness={
                    "identity": label,
                    "generator": lhs.source.names[k],
                    "lhs": lhs.images[k].format(names),
                    "rhs": rhs.images[k].format(names),
                    **out.witness,
                },
            )
        if out.verdict is Verdict.UNDECIDABLE:
            if strict:
                raise UndecidableLevel(f"{L.descriptor}: {label} is not decidable symbolically")
            report.undecidable.append(label)
        elif out.how == "symbolic":
            report.symbolic += 1
        else:
            report.pointwise += 1
    return report


def check_homomorphism(f: GeneratorMap, mode: Mode = Symbolic()) -> Outcome:
    """Every source relator must map to the identity of the target."""
    pairs = [(f.apply(r), Word()) for r in f.source.relators]
    return Judge(mode).compare(f.target, pairs)


# ---------------------------------------------------------------- cocycles

@dataclass
class CocycleResult:
    status: str  # Verified | Refuted | Inconclusive
    word: Word
    mode: str
    witness: dict | None = None

    def __bool__(self):
        return self.status == "Verified"


def _eq1(L: CosimplicialGroup, b: Word, n: int) -> tuple[Presentation, list[tuple[Word, Word]]]:
    """d^2(b_n) d^0(b_n) = d^1(b_n) in L_{n+1}."""
    d = [L.coface(n + 1, i).apply(b) for i in range(3)]
    return L.level(n + 1), [(d[2] * d[0], d[1])]


def cocycle_check(L: CosimplicialGroup, b: Word, mode: Mode = Symbolic(), depth: int = 4) -> CocycleResult:
    """Cocycle equation and ``s^0(b) = e``, then the same for b_n, n <= depth."""
    judge = Judge(mode)
    top = depth if L.truncation is None else min(depth, L.truncation - 1)
    bn = b
    undecided = False
    for n in range(1, top + 1):
        if n > 1:
            bn = L.coface(n, n).apply(bn)
        checks = [_eq1(L, bn, n), (L.level(n - 1), [(L.codegeneracy(n - 1, 0).apply(bn), Word())])]
        for (p, pairs), what in zip(checks, ("d2(b)d0(b)=d1(b)", "s0(b)=e")):
            out = judge.compare(p, pairs)
            if out.verdict is Verdict.NOT_EQUAL:
                return CocycleResult("Refuted", b, str(mode), {"level": n, "condition": what, **out.witness})
            if out.verdict is Verdict.UNDECIDABLE:
                undecided = True
        if n == 1 and undecided:
            # later levels add nothing decidable when level 1 is already open
            break
    return CocycleResult("Inconclusive" if undecided else "Verified", b, str(mode))


def scan_cocycles(L: CosimplicialGroup, m_max: int, mode: Mode = Symbolic()) -> list[Word]:
    """Verified cocycles among e and a_1^m, 0 < |m| <= m_max (not a proof of completeness)."""
    found = []
    for m in sorted(range(-m_max, m_max + 1), key=lambda m: (abs(m), m < 0)):
        w = Word.gen(0, m)
        if cocycle_check(L, w, mode):
            found.append(w)
    return found


def build_b_sequence(L: CosimplicialGroup, b: Word, n: int) -> Word:
    """b_1 = b and b_{k+1} = d^{k+1}(b_k)."""
    if n < 1:
        raise ValueError("b_n is defined for n >= 1")
    out = b
    for k in range(1, n):
        out = L.coface(k + 1, k + 1).apply(out)
    return out


def _require_cocycle(L, b, mode):
    res = cocycle_check(L, b, mode)
    if not res:
        raise CocycleNotVerified(f"{b.format(L.level(1).names)} is not a verified cocycle of {L.descriptor} ({res.status})", witness=res.witness)
    return res


def build_Lb(L: CosimplicialGroup, b: Word, mode: Mode | None = None) -> CosimplicialGroup:
    """Level-wise free product with a fresh a_0 and d^0 twisted by a_0 -> a_0 b_n."""
    mode = mode or Auto(default_catalog())
    _require_cocycle(L, b, mode)

    def level(n):
        p = L.level(n)
        first = "a0" if "a0" not in p.names else "x0"
        return Presentation(
            p.num_generators + 1,
            relator_factory=lambda: [r.shift(1) for r in p.relators],
            kind=Explicit(),
            names=(first,) + p.names,
        )

    def coface(n, i):
        rest = [w.shift(1) for w in L.coface(n, i).images]
        head = Word.gen(0) * build_b_sequence(L, b, n).shift(1) if i == 0 else Word.gen(0)
        return [head] + rest

    def codegeneracy(n, i):
        return [Word.gen(0)] + [w.shift(1) for w in L.codegeneracy(n, i).images]

    return CosimplicialGroup(f"lb:{L.descriptor}:{b.format(L.level(1).names)}", level, coface, codegeneracy, L.truncation)


def build_hb(L: CosimplicialGroup, b: Word, n_max: int, mode: Mode | None = None) -> CosimplicialMorphism:
    """h^n(a_j) = (d^0)^(j-1) (d^2)^(n-j) (b), checked against all cofaces and codegeneracies."""
    mode = mode or Auto(default_catalog())
    _require_cocycle(L, b, mode)
    F = build_standard("free")

    def level_map(n):
        images = []
        for j in range(1, n + 1):
            w, lvl = b, 1
            for _ in range(n - j):
                lvl += 1
                w = L.coface(lvl, 2).apply(w)
            for _ in range(j - 1):
                lvl += 1
                w = L.coface(lvl, 0).apply(w)
            images.append(w)
        return GeneratorMap(F.level(n), L.level(n), tuple(images), f"h^{n}")

    h = CosimplicialMorphism(F, L, level_map)
    verify_morphism(h, n_max, mode)
    return h


def verify_morphism(h: CosimplicialMorphism, n_max: int, mode: Mode = Symbolic()) -> int:
    """Commutation with cofaces and codegeneracies up to level n_max; returns squares checked."""
    S, T = h.source, h.target
    judge = Judge(mode)
    count = 0

    def square(label, lhs, rhs):
        nonlocal count
        out = judge.maps_agree(lhs, rhs)
        if out.verdict is not Verdict.EQUAL:
            raise CommutationFailure(f"{label} does not commute ({out.verdict})", witness={"square": label, **(out.witness or {})})
        count += 1

    for n in range(1, n_max + 1):
        for i in range(n + 1):
            square(f"d^{i} into level {n}", S.coface(n, i).then(h.at(n)), h.at(n - 1).then(T.coface(n, i)))
    for n in range(0, n_max):
        for i in range(n + 1):
            square(f"s^{i} onto level {n}", S.codegeneracy(n, i).then(h.at(n)), h.at(n + 1).then(T.codegeneracy(n, i)))
    return count


def plus_morphism(h: CosimplicialMorphism, Fplus: CosimplicialGroup, Lb: CosimplicialGroup) -> CosimplicialMorphism:
    """Id * h^n : F^+ -> L^b."""

    def level_map(n):
        images = (Word.gen(0),) + tuple(w.shift(1) for w in h.at(n).images)
        return GeneratorMap(Fplus.level(n), Lb.level(n), images, f"h+^{n}")

    return CosimplicialMorphism(Fplus, Lb, level_map)


# ---------------------------------------------------------------- descriptors

def parse_family(descriptor: str, mode: Mode | None = None) -> CosimplicialGroup:
    """Family descriptors, including ``lb:<family>:<word>``."""
    if descriptor.startswith("lb:"):
        inner, sep, word = descriptor[3:].rpartition(":")
        if not sep or not inner:
            raise ConfigError(f"expected lb:<family>:<word>, got {descriptor!r}")
        L = parse_family(inner, mode)
        try:
            b = parse_word(word, L.level(1).names)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        return build_Lb(L, b, mode)
    return build_standard(descriptor)


def parse_level_word(L: CosimplicialGroup, text: str, level: int = 1) -> Word:
    try:
        return parse_word(text, L.level(level).names)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


__all__ = [
    "Auto", "CocycleResult", "CosimplicialGroup", "CosimplicialMorphism", "GeneratorMap", "IdentityReport",
    "Judge", "Mode", "Pointwise", "Symbolic", "build_Lb", "build_b_sequence", "build_hb", "build_standard",
    "check_homomorphism", "cocycle_check", "cosimplicial_identities", "default_catalog", "derived_relators",
    "gamma_relators", "identity_map", "parse_family", "parse_level_word", "plus_morphism", "scan_cocycles",
    "verify_cosimplicial_identities", "verify_morphism",
]
