"""Exhaustive enumeration of Hom(P, G) for a finite group G.

A homomorphism is stored as the tuple of images of the generators.  Tuples
are built one coordinate at a time in lexicographic order; a relator is
applied as soon as every generator it mentions has been assigned, which
prunes early without changing the result or its order.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import BudgetExceeded, PredicateDisagreement
from .groups import FiniteGroup, evaluate_word_batch, series_profile, subgroup_closure
from .presentation import FreeNilpotent, FreeSolvable, Presentation

DEFAULT_BUDGET = 10**7
CACHE_VERSION = 1
_CHUNK = 1 << 18
# relator letters x |G|^n beyond which series kinds are enumerated by the predicate
RELATOR_WORK_LIMIT = 2 * 10**8


@dataclass(frozen=True, eq=False)
class HomSet:
    presentation: Presentation
    group: FiniteGroup
    tuples: np.ndarray  # (N, n) int64, lexicographically sorted

    def __post_init__(self):
        object.__setattr__(self, "_keys", encode(self.tuples, self.group.order))

    def __len__(self):
        return len(self.tuples)

    @property
    def width(self) -> int:
        return self.tuples.shape[1]

    def lookup(self, tuples: np.ndarray) -> np.ndarray:
        """Row indices of ``tuples`` in this set, ``-1`` where absent."""
        tuples = np.asarray(tuples, dtype=np.int64)
        if tuples.ndim == 1:
            tuples = tuples[None, :]
        keys = encode(tuples, self.group.order)
        if not len(self._keys):
            return np.full(len(keys), -1, dtype=np.int64)
        pos = np.searchsorted(self._keys, keys)
        pos = np.minimum(pos, len(self._keys) - 1)
        found = self._keys[pos] == keys
        return np.where(found, pos, -1)

    def index_of(self, entries) -> int:
        return int(self.lookup(np.asarray([entries], dtype=np.int64))[0])


def encode(tuples: np.ndarray, order: int) -> np.ndarray:
    """Mixed-radix key, first coordinate most significant."""
    keys = np.zeros(tuples.shape[0], dtype=np.int64)
    for k in range(tuples.shape[1]):
        keys = keys * order + tuples[:, k]
    return keys


def decode(keys: np.ndarray, order: int, n: int) -> np.ndarray:
    """Inverse of :func:`encode`."""
    out = np.empty((len(keys), n), dtype=np.int64)
    keys = np.asarray(keys, dtype=np.int64)
    for k in range(n - 1, -1, -1):
        keys, out[:, k] = np.divmod(keys, order)
    return out


def _check_budget(order: int, n: int, budget: int):
    if order**n > budget:
        raise BudgetExceeded(f"|G|^n = {order}^{n} = {order ** n} exceeds the budget {budget}")


def enumerate_hom(
    presentation: Presentation,
    group: FiniteGroup,
    budget: int = DEFAULT_BUDGET,
    cross_check: bool = True,
    cache_dir: str | os.PathLike | None = None,
    level: int | None = None,
) -> HomSet:
    """All tuples in G^n at which every relator evaluates to the identity.

    For free nilpotent and free solvable kinds the result is compared with
    the series predicate on the subgroup each tuple generates; the two must
    agree exactly.
    """
    n, order = presentation.num_generators, group.order
    _check_budget(order, n, budget)
    if cache_dir is not None:
        hit = _cache_load(cache_dir, presentation, group)
        if hit is not None:
            return HomSet(presentation, group, hit)
    series = isinstance(presentation.kind, (FreeNilpotent, FreeSolvable))
    if series and sum(len(r) for r in presentation.relators) * order**n > RELATOR_WORK_LIMIT:
        # the relator list is too long to evaluate; the series predicate is exact on its own
        result = HomSet(presentation, group, decode(np.flatnonzero(series_predicate(group, n, presentation.kind, budget)), order, n))
        if cache_dir is not None:
            _cache_store(cache_dir, result, n if level is None else level)
        return result
    by_last: list[list] = [[] for _ in range(n)]
    for r in presentation.relators:
        if r:
            by_last[r.max_generator()].append(r)
    tuples = np.zeros((1, 0), dtype=np.int64)
    for k in range(n):
        parts = []
        step = max(1, _CHUNK // order)
        for start in range(0, len(tuples), step):
            block = tuples[start : start + step]
            cand = np.empty((len(block) * order, k + 1), dtype=np.int64)
            cand[:, :k] = np.repeat(block, order, axis=0)
            cand[:, k] = np.tile(np.arange(order, dtype=np.int64), len(block))
            for r in by_last[k]:
                cand = cand[evaluate_word_batch(group, r, cand) == 0]
                if not len(cand):
                    break
            parts.append(cand)
        tuples = np.concatenate(parts) if parts else np.zeros((0, k + 1), dtype=np.int64)
    result = HomSet(presentation, group, tuples)
    if cross_check and series:
        _cross_check(result, budget)
    if cache_dir is not None:
        _cache_store(cache_dir, result, n if level is None else level)
    return result


# ---------------------------------------------------------------- predicates

class ClosureOracle:
    """Memoised subgroup closures as bitmasks, with series profiles."""

    def __init__(self, group: FiniteGroup):
        self.group = group
        self._add: dict[tuple[int, int], int] = {}
        self._profile: dict[int, object] = {}

    def add(self, mask: int, x: int) -> int:
        if mask >> x & 1:
            return mask
        key = (mask, x)
        hit = self._add.get(key)
        if hit is None:
            elems = [i for i in range(self.group.order) if mask >> i & 1]
            hit = sum(1 << i for i in subgroup_closure(self.group, elems + [x]))
            self._add[key] = hit
        return hit

    def profile(self, mask: int):
        hit = self._profile.get(mask)
        if hit is None:
            elems = [i for i in range(self.group.order) if mask >> i & 1]
            hit = series_profile(self.group, elems)
            self._profile[mask] = hit
        return hit

    def masks(self, n: int) -> list[int]:
        """Closure mask of every tuple of G^n, in lexicographic order."""
        masks = [1]
        for _ in range(n):
            masks = [self.add(m, x) for m in masks for x in range(self.group.order)]
        return masks


_oracles: dict[str, ClosureOracle] = {}


def closure_oracle(group: FiniteGroup) -> ClosureOracle:
    key = group.fingerprint
    if key not in _oracles:
        _oracles[key] = ClosureOracle(group)
    return _oracles[key]


def series_predicate(group: FiniteGroup, n: int, kind, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """Boolean mask over G^n: the generated subgroup has class <= c (or derived length <= d)."""
    _check_budget(group.order, n, budget)
    oracle = closure_oracle(group)
    masks = oracle.masks(n)
    verdict: dict[int, bool] = {}
    out = np.empty(len(masks), dtype=bool)
    for pos, m in enumerate(masks):
        v = verdict.get(m)
        if v is None:
            prof = oracle.profile(m)
            if isinstance(kind, FreeNilpotent):
                v = prof.nilpotency_class is not None and prof.nilpotency_class <= kind.nilpotency_class
            elif isinstance(kind, FreeSolvable):
                v = prof.derived_length is not None and prof.derived_length <= kind.derived_length
            else:
                raise TypeError(f"no series predicate for {kind}")
            verdict[m] = v
        out[pos] = v
    return out


def _cross_check(homset: HomSet, budget: int):
    group, kind = homset.group, homset.presentation.kind
    n = homset.width
    pred = series_predicate(group, n, kind, budget)
    by_relators = np.zeros(group.order**n, dtype=bool)
    by_relators[encode(homset.tuples, group.order)] = True
    diff = np.flatnonzero(pred != by_relators)
    if len(diff):
        key = int(diff[0])
        digits = []
        for _ in range(n):
            key, d = divmod(key, group.order)
            digits.append(d)
        raise PredicateDisagreement(
            f"relator and series predicates disagree on {len(diff)} tuples in {group.name} ({kind})",
            witness={"tuple": digits[::-1], "relators": bool(by_relators[diff[0]]), "series": bool(pred[diff[0]])},
        )


# ---------------------------------------------------------------- cache

def cache_key(presentation: Presentation, group: FiniteGroup) -> str:
    blob = f"{CACHE_VERSION}:{group.fingerprint}:{presentation.fingerprint()}"
    return hashlib.sha256(blob.encode()).hexdigest()


def _cache_path(cache_dir, presentation, group) -> Path:
    return Path(cache_dir) / f"hom-{cache_key(presentation, group)}.json"


def _cache_load(cache_dir, presentation, group):
    path = _cache_path(cache_dir, presentation, group)
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if (
        data.get("version") != CACHE_VERSION
        or data.get("group") != group.fingerprint
        or data.get("presentation") != presentation.fingerprint()
    ):
        return None
    rows = data.get("tuples")
    n = presentation.num_generators
    if not isinstance(rows, list) or any(not isinstance(r, list) or len(r) != n for r in rows):
        return None
    tuples = np.asarray(rows, dtype=np.int64).reshape(len(rows), n)
    if tuples.size and (tuples.min() < 0 or tuples.max() >= group.order):
        return None
    # a damaged entry must not pass for a homomorphism
    for r in presentation.relators:
        if len(tuples) and np.any(evaluate_word_batch(group, r, tuples) != 0):
            return None
    return tuples


def _cache_store(cache_dir, homset: HomSet, level: int):
    path = _cache_path(cache_dir, homset.presentation, homset.group)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "version": CACHE_VERSION,
        "group": homset.group.fingerprint,
        "presentation": homset.presentation.fingerprint(),
        "level": level,
        "tuples": homset.tuples.tolist(),
    }
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, separators=(",", ":"))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
