"""Finite groups as dense multiplication tables.

Elements are the integers ``0 .. order-1`` and 0 is always the identity.
Permutation groups are composed right-to-left, ``(x*y)(i) = x(y(i))``.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    GeneratorIndexOutOfRange,
    InvalidGroupFile,
    NotASubgroup,
    UnknownCatalogName,
)
from .words import Word

# exhaustive associativity check up to this order, sampled above
_ASSOC_EXHAUSTIVE = 64


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    name: str
    mul: np.ndarray
    inv: np.ndarray
    generators: tuple[int, ...] | None = None
    labels: tuple | None = field(default=None, repr=False)

    identity = 0

    @property
    def order(self) -> int:
        return int(self.mul.shape[0])

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.element_orders) if self.order > 1 else 1

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for x in range(self.order):
            k, y = 1, x
            while y != 0:
                y = int(self.mul[y, x])
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def power_table(self) -> np.ndarray:
        """``power_table[k, x] = x**k`` for ``0 <= k < exponent``."""
        table = np.zeros((self.exponent, self.order), dtype=np.int64)
        cur = np.zeros(self.order, dtype=np.int64)
        ids = np.arange(self.order)
        for k in range(self.exponent):
            table[k] = cur
            cur = self.mul[cur, ids]
        return table

    @cached_property
    def conj_table(self) -> np.ndarray:
        """``conj_table[g, x] = g x g^-1``."""
        table = self.mul[self.mul, self.inv[:, None]]
        table.setflags(write=False)
        return table

    @cached_property
    def fingerprint(self) -> str:
        return hashlib.sha256(np.ascontiguousarray(self.mul, dtype=np.int64).tobytes()).hexdigest()

    def power(self, x: int, k: int) -> int:
        return int(self.power_table[k % self.exponent, x])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def elements(self) -> range:
        return range(self.order)

    def label(self, x: int):
        return self.labels[x] if self.labels is not None else x

    def index_of(self, label) -> int:
        if self.labels is None:
            raise ValueError("group has no element labels")
        return self.labels.index(tuple(label))

    def subgroup(self, elements: Iterable[int], name: str | None = None) -> tuple[FiniteGroup, np.ndarray]:
        """Re-index a subgroup; returns the new group and its embedding array."""
        elems = sorted(set(int(x) for x in elements))
        if not is_subgroup(self, elems):
            raise NotASubgroup(f"{elems} is not closed in {self.name}")
        pos = {x: i for i, x in enumerate(elems)}
        emb = np.array(elems, dtype=np.int64)
        mul = np.array([[pos[int(self.mul[x, y])] for y in elems] for x in elems], dtype=np.int64)
        inv = np.array([pos[int(self.inv[x])] for x in elems], dtype=np.int64)
        labels = tuple(self.labels[x] for x in elems) if self.labels is not None else None
        return FiniteGroup(name or f"{self.name}<{len(elems)}>", _freeze(mul), _freeze(inv), None, labels), emb


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


def group_from_table(name: str, table, generators=None, labels=None) -> FiniteGroup:
    mul = np.array(table, dtype=np.int64)
    validate_table(mul)
    inv = np.argmax(mul == 0, axis=1)
    group = FiniteGroup(name, _freeze(mul), _freeze(inv), tuple(generators) if generators else None, labels)
    if group.generators is not None and len(subgroup_closure(group, group.generators)) != group.order:
        raise InvalidGroupFile(f"{name}: listed generators do not generate the group")
    return group


def validate_table(mul: np.ndarray, rng_seed: int = 0) -> None:
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
        raise InvalidGroupFile("multiplication table must be a non-empty square array")
    n = mul.shape[0]
    if mul.min() < 0 or mul.max() >= n:
        raise InvalidGroupFile("table entries out of range")
    ids = np.arange(n)
    if not (np.array_equal(mul[0], ids) and np.array_equal(mul[:, 0], ids)):
        raise InvalidGroupFile("element 0 must be the identity")
    for row in mul:
        if len(set(row.tolist())) != n:
            raise InvalidGroupFile("table is not a Latin square")
    if n <= _ASSOC_EXHAUSTIVE:
        left = mul[mul[:, :, None], ids[None, None, :]]  # (xy)z
        right = mul[ids[:, None, None], mul[None, :, :]]  # x(yz)
        if not np.array_equal(left, right):
            raise InvalidGroupFile("table is not associative")
    else:
        rng = np.random.default_rng(rng_seed)
        x, y, z = rng.integers(0, n, size=(3, 20000))
        if not np.array_equal(mul[mul[x, y], z], mul[x, mul[y, z]]):
            raise InvalidGroupFile("table is not associative")


def group_from_permutations(name: str, perms: Sequence[Sequence[int]]) -> FiniteGroup:
    """Closure of permutation generators, elements sorted lexicographically."""
    perms = [tuple(int(i) for i in p) for p in perms]
    degree = len(perms[0]) if perms else 1
    for p in perms:
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise InvalidGroupFile(f"{p} is not a permutation of 0..{degree - 1}")
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for p in perms:
                y = tuple(x[p[i]] for i in range(degree))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return _group_from_perm_set(name, seen, perms)


def _compose(x, y):
    return tuple(x[i] for i in y)


def _group_from_perm_set(name: str, elements, gens=()) -> FiniteGroup:
    elems = sorted(elements)
    pos = {p: i for i, p in enumerate(elems)}
    perms = np.array(elems, dtype=np.int64).reshape(len(elems), -1)
    degree = perms.shape[1]
    mul = np.empty((len(elems), len(elems)), dtype=np.int64)
    if degree <= 15:
        # lexicographic order of images = numeric order of base-degree keys (fits int64)
        weights = degree ** np.arange(degree - 1, -1, -1, dtype=np.int64)
        keys = perms @ weights
        for i, x in enumerate(perms):
            mul[i] = np.searchsorted(keys, x[perms] @ weights)  # row i: x ∘ y for every y
    else:
        for i, x in enumerate(elems):
            for j, y in enumerate(elems):
                mul[i, j] = pos[_compose(x, y)]
    generators = tuple(pos[tuple(g)] for g in gens) or None
    return group_from_table(name, mul, generators, tuple(elems))


# ---------------------------------------------------------------- catalog

_CATALOG_RE = re.compile(r"^(cyclic|sym|alt|dihedral|quaternion):(\d+)$")


def catalog_group(name: str) -> FiniteGroup:
    """Build a group from ``cyclic:n | sym:n | alt:n | dihedral:2n | quaternion:8``
    or load it from a JSON group file."""
    m = _CATALOG_RE.match(name.strip())
    if not m:
        path = Path(name)
        if path.suffix == ".json" or path.exists():
            return load_group_file(path)
        raise UnknownCatalogName(f"unknown group descriptor {name!r}")
    kind, k = m.group(1), int(m.group(2))
    return _catalog_cached(kind, k)


_cache: dict = {}


def _catalog_cached(kind: str, k: int) -> FiniteGroup:
    key = (kind, k)
    if key not in _cache:
        _cache[key] = _build_catalog(kind, k)
    return _cache[key]


def _build_catalog(kind: str, k: int) -> FiniteGroup:
    name = f"{kind}:{k}"
    if kind == "cyclic":
        if k < 1:
            raise UnknownCatalogName(name)
        rot = tuple((i + 1) % k for i in range(k))
        return _group_from_perm_set(name, {tuple((i + s) % k for i in range(k)) for s in range(k)}, [rot])
    if kind in ("sym", "alt"):
        if k < 1 or k > 7:
            raise UnknownCatalogName(f"{name}: degree must be 1..7")
        perms = itertools.permutations(range(k))
        if kind == "alt":
            perms = (p for p in perms if _parity(p) == 0)
        return _group_from_perm_set(name, set(perms))
    if kind == "dihedral":
        if k < 2 or k % 2:
            raise UnknownCatalogName(f"{name}: order must be even and >= 2")
        n = k // 2
        if n == 1:
            return _group_from_perm_set(name, {(0, 1), (1, 0)})
        if n == 2:
            return group_from_permutations(name, [(1, 0, 3, 2), (2, 3, 0, 1)])
        rot = tuple((i + 1) % n for i in range(n))
        ref = tuple((-i) % n for i in range(n))
        return group_from_permutations(name, [rot, ref])
    if kind == "quaternion":
        if k != 8:
            raise UnknownCatalogName(f"{name}: only quaternion:8 is available")
        return _quaternion8()
    raise UnknownCatalogName(name)


def _parity(p) -> int:
    seen, parity = set(), 0
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def _quaternion8() -> FiniteGroup:
    # units (sign, axis) with axis 0..3 = 1, i, j, k; left regular action on 8 points
    table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    units = [(s, a) for s in (1, -1) for a in range(4)]
    point = {u: i for i, u in enumerate(units)}

    def times(u, v):
        s, a = table[(u[1], v[1])]
        return (u[0] * v[0] * s, a)

    perms = {tuple(point[times(u, v)] for v in units) for u in units}
    return _group_from_perm_set("quaternion:8", perms)


def catalog_names(max_order: int) -> list[str]:
    """Every catalog descriptor whose group has order <= ``max_order``."""
    names = [f"cyclic:{n}" for n in range(1, max_order + 1)]
    names += [f"dihedral:{k}" for k in range(2, max_order + 1, 2)]
    names += [f"sym:{n}" for n in range(1, 8) if math.factorial(n) <= max_order]
    names += [f"alt:{n}" for n in range(1, 8) if max(1, math.factorial(n) // 2) <= max_order]
    if max_order >= 8:
        names.append("quaternion:8")
    return names


# ---------------------------------------------------------------- files

def load_group_file(path) -> FiniteGroup:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError) as exc:
        raise InvalidGroupFile(f"{path}: {exc}") from exc
    name = data.get("name", path.stem)
    try:
        if "table" in data:
            if "order" in data and int(data["order"]) != len(data["table"]):
                raise InvalidGroupFile(f"{path}: order does not match table size")
            return group_from_table(name, data["table"])
        if "permutation_generators" in data:
            gens = data["permutation_generators"]
            if any(len(g) != int(data.get("degree", len(g))) for g in gens):
                raise InvalidGroupFile(f"{path}: generator length differs from degree")
            return group_from_permutations(name, gens)
    except InvalidGroupFile:
        raise
    except (TypeError, ValueError, IndexError) as exc:
        raise InvalidGroupFile(f"{path}: {exc}") from exc
    raise InvalidGroupFile(f"{path}: needs 'table' or 'permutation_generators'")


def group_to_json(group: FiniteGroup) -> dict:
    return {"name": group.name, "order": group.order, "table": group.mul.tolist()}


# ---------------------------------------------------------------- words

def evaluate_word(group: FiniteGroup, word: Word, assignment: Sequence[int]) -> int:
    """Multiply out ``word`` left to right with generator ``g`` sent to ``assignment[g]``."""
    if word.max_generator() >= len(assignment):
        raise GeneratorIndexOutOfRange(
            f"word uses generator {word.max_generator()} but only {len(assignment)} are assigned"
        )
    acc = 0
    for g, e in word.letters:
        acc = int(group.mul[acc, group.power(int(assignment[g]), e)])
    return acc


def evaluate_word_batch(group: FiniteGroup, word: Word, tuples: np.ndarray) -> np.ndarray:
    """Vectorised ``evaluate_word`` over the rows of an ``(N, k)`` array."""
    if word.max_generator() >= tuples.shape[1]:
        raise GeneratorIndexOutOfRange(
            f"word uses generator {word.max_generator()} but tuples have {tuples.shape[1]} columns"
        )
    acc = np.zeros(tuples.shape[0], dtype=np.int64)
    pw = group.power_table
    for g, e in word.letters:
        acc = group.mul[acc, pw[e % group.exponent][tuples[:, g]]]
    return acc


# ---------------------------------------------------------------- subgroups

def is_subgroup(group: FiniteGroup, elements) -> bool:
    s = set(int(x) for x in elements)
    if 0 not in s:
        return False
    arr = np.fromiter(s, dtype=np.int64)
    prods = group.mul[np.ix_(arr, arr)]
    return set(np.unique(prods).tolist()) <= s


def subgroup_closure(group: FiniteGroup, seed: Iterable[int]) -> tuple[int, ...]:
    seed = sorted(set(int(x) for x in seed) - {0})
    members = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s in seed:
                y = int(group.mul[x, s])
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(members))


class SeriesProfile(NamedTuple):
    """``None`` means not nilpotent / not solvable."""

    nilpotency_class: int | None
    derived_length: int | None


def commutator_element(group: FiniteGroup, x: int, y: int) -> int:
    m, i = group.mul, group.inv
    return int(m[m[i[x], i[y]], m[x, y]])


def commutator_subgroup(group: FiniteGroup, a, b) -> tuple[int, ...]:
    """[A, B] for subsets closed under the group law."""
    a = np.asarray(sorted(a), dtype=np.int64)
    b = np.asarray(sorted(b), dtype=np.int64)
    m, i = group.mul, group.inv
    comms = m[m[i[a][:, None], i[b][None, :]], m[a[:, None], b[None, :]]]
    return subgroup_closure(group, np.unique(comms).tolist())


def lower_central_series(group: FiniteGroup, h) -> list[tuple[int, ...]]:
    """Gamma^1 = H, Gamma^(k+1) = [Gamma^k, H], until it stabilises."""
    h = tuple(sorted(h))
    series = [h]
    while True:
        nxt = commutator_subgroup(group, series[-1], h)
        if nxt == series[-1]:
            return series
        series.append(nxt)


def derived_series(group: FiniteGroup, h) -> list[tuple[int, ...]]:
    series = [tuple(sorted(h))]
    while True:
        nxt = commutator_subgroup(group, series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def series_profile(group: FiniteGroup, h) -> SeriesProfile:
    h = tuple(sorted(set(int(x) for x in h)))
    if not is_subgroup(group, h):
        raise NotASubgroup(f"{list(h)} is not a subgroup of {group.name}")
    lcs = lower_central_series(group, h)
    nil = len(lcs) - 1 if lcs[-1] == (0,) else None
    ds = derived_series(group, h)
    dl = len(ds) - 1 if ds[-1] == (0,) else None
    return SeriesProfile(nil, dl)


class ConjugacyData(NamedTuple):
    classes: list[tuple[int, ...]]
    centralizers: list[tuple[int, ...]]


def conjugacy_data(group: FiniteGroup) -> ConjugacyData:
    conj = group.conj_table
    classes, seen = [], set()
    for x in range(group.order):
        if x in seen:
            continue
        cls = tuple(sorted(set(conj[:, x].tolist())))
        seen.update(cls)
        classes.append(cls)
    centralizers = [tuple(np.flatnonzero(conj[:, x] == x).tolist()) for x in range(group.order)]
    return ConjugacyData(classes, centralizers)
