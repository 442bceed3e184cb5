"""The simplicial set Hom(L, G) for a cosimplicial group L and finite G.

Faces and degeneracies are materialised as integer index maps between the
enumerated levels: ``faces[n][i]`` sends level ``n`` to level ``n - 1`` and
``degeneracies[n][i]`` sends level ``n`` to level ``n + 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .cosimplicial import (
    CosimplicialGroup,
    GeneratorMap,
    Mode,
    build_Lb,
    build_hb,
    build_standard,
    plus_morphism,
)
from .errors import (
    BijectionFailure,
    CommutationFailure,
    EquivarianceViolation,
    ImageNotAHomomorphism,
    PullbackFailure,
    SimplicialIdentityViolation,
)
from .groups import FiniteGroup, evaluate_word, evaluate_word_batch
from .homsets import DEFAULT_BUDGET, HomSet, enumerate_hom
from .words import Word


def induced_map(phi: GeneratorMap, source: HomSet, target: HomSet) -> np.ndarray:
    """``rho -> rho ∘ phi`` from Hom(phi.target, G) into Hom(phi.source, G)."""
    group = source.group
    cols = [evaluate_word_batch(group, w, source.tuples) for w in phi.images]
    images = np.stack(cols, axis=1) if cols else np.zeros((len(source), 0), dtype=np.int64)
    idx = target.lookup(images)
    missing = np.flatnonzero(idx < 0)
    if len(missing):
        bad = images[missing[0]]
        violated = next(
            (r for r in target.presentation.relators if evaluate_word(group, r, bad) != 0),
            None,
        )
        raise ImageNotAHomomorphism(
            f"{phi.label or 'map'} sends {len(missing)} tuples outside Hom({target.presentation}, {group.name})",
            witness={
                "group": group.name,
                "tuple": source.tuples[missing[0]].tolist(),
                "image": bad.tolist(),
                "relator": None if violated is None else violated.format(target.presentation.names),
            },
        )
    return idx


@dataclass(eq=False)
class SimplicialHomSpace:
    family: CosimplicialGroup
    group: FiniteGroup
    levels: list[HomSet]
    faces: dict[int, list[np.ndarray]]
    degeneracies: dict[int, list[np.ndarray]]
    _tiers: list[np.ndarray] | None = field(default=None, repr=False)

    @property
    def n_max(self) -> int:
        return len(self.levels) - 1

    def sizes(self) -> list[int]:
        return [len(h) for h in self.levels]

    @property
    def tiers(self) -> list[np.ndarray]:
        if self._tiers is None:
            self._tiers = filtration_tiers(self)
        return self._tiers


def build_space(
    L: CosimplicialGroup,
    group: FiniteGroup,
    n_max: int,
    budget: int = DEFAULT_BUDGET,
    cache_dir=None,
    check: bool = True,
) -> SimplicialHomSpace:
    levels = [enumerate_hom(L.level(n), group, budget=budget, cache_dir=cache_dir, level=n) for n in range(n_max + 1)]
    faces = {n: [induced_map(L.coface(n, i), levels[n], levels[n - 1]) for i in range(n + 1)] for n in range(1, n_max + 1)}
    degens = {n: [induced_map(L.codegeneracy(n, i), levels[n], levels[n + 1]) for i in range(n + 1)] for n in range(n_max)}
    space = SimplicialHomSpace(L, group, levels, faces, degens)
    if check:
        verify_simplicial_identities(space)
    return space


def verify_simplicial_identities(space: SimplicialHomSpace) -> int:
    """All simplicial identities on the index maps; returns the number checked."""
    d, s = space.faces, space.degeneracies
    count = 0

    def same(label, lhs, rhs):
        nonlocal count
        bad = np.flatnonzero(lhs != rhs)
        if len(bad):
            raise SimplicialIdentityViolation(
                f"{label} fails on {len(bad)} simplices", witness={"identity": label, "simplex": int(bad[0])}
            )
        count += 1

    top = space.n_max
    for n in range(2, top + 1):
        for j in range(n + 1):
            for i in range(j):
                same(f"d_{i}d_{j} = d_{j - 1}d_{i} on level {n}", d[n - 1][i][d[n][j]], d[n - 1][j - 1][d[n][i]])
    for n in range(0, top - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                same(f"s_{i}s_{j} = s_{j + 1}s_{i} on level {n}", s[n + 1][i][s[n][j]], s[n + 1][j + 1][s[n][i]])
    for n in range(0, top):
        ident = np.arange(len(space.levels[n]))
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = d[n + 1][i][s[n][j]]
                if i < j:
                    rhs = s[n - 1][j - 1][d[n][i]]
                elif i in (j, j + 1):
                    rhs = ident
                else:
                    rhs = s[n - 1][j][d[n][i - 1]]
                same(f"d_{i}s_{j} on level {n}", lhs, rhs)
        for j in range(n + 1):
            if len(np.unique(s[n][j])) != len(s[n][j]):
                raise SimplicialIdentityViolation(f"s_{j} on level {n} is not injective")
    return count


# ---------------------------------------------------------------- filtration

def filtration_tiers(space: SimplicialHomSpace) -> list[np.ndarray]:
    """tier(x) = largest t with x in S^t, via S^t(X_n) = ∪_i s_i(S^{t-1}(X_{n-1}))."""
    tiers = [np.zeros(len(space.levels[0]), dtype=np.int64)]
    for n in range(1, space.n_max + 1):
        t = np.zeros(len(space.levels[n]), dtype=np.int64)
        for s in space.degeneracies[n - 1]:
            np.maximum.at(t, s, tiers[n - 1] + 1)
        tiers.append(t)
    return tiers


@dataclass
class FiltrationTier:
    level: int
    tiers: np.ndarray

    def strata(self) -> list[int]:
        """|S^t \\ S^{t+1}| for t = 0..level."""
        return np.bincount(self.tiers, minlength=self.level + 1).tolist()

    def filtration_sizes(self) -> list[int]:
        """|S^t| for t = 0..level."""
        strata = self.strata()
        return [sum(strata[t:]) for t in range(len(strata))]


def filtration(space: SimplicialHomSpace, n: int) -> FiltrationTier:
    return FiltrationTier(n, space.tiers[n])


def check_filtration(space: SimplicialHomSpace) -> None:
    """Partition sizes, tier monotonicity under degeneracies, faces lowering tiers by at most one."""
    tiers = space.tiers
    for n, hs in enumerate(space.levels):
        if sum(filtration(space, n).strata()) != len(hs):
            raise BijectionFailure(f"strata of level {n} do not partition it")
        if n < space.n_max:
            for i, s in enumerate(space.degeneracies[n]):
                if np.any(tiers[n + 1][s] < tiers[n] + 1):
                    raise BijectionFailure(f"s_{i} does not raise the tier on level {n}")
        if n >= 1:
            for i, f in enumerate(space.faces[n]):
                if np.any(tiers[n - 1][f] < tiers[n] - 1):
                    raise BijectionFailure(f"d_{i} drops a tier by more than one on level {n}")


# ---------------------------------------------------------------- wedge decomposition

@dataclass
class WedgeReport:
    level: int
    t: int
    stratum: int
    choices: int  # C(n, t)
    identity_free: int  # |Hom(L_{n-t}, G) \ S_1|
    complementary_choices: int  # C(n, n - t): the indexing by kept coordinates

    @property
    def holds(self) -> bool:
        return self.stratum == self.choices * self.identity_free

    def to_json(self) -> dict:
        return {
            "n": self.level, "t": self.t, "stratum": self.stratum, "C(n,t)": self.choices,
            "C(n,n-t)": self.complementary_choices, "identity_free": self.identity_free, "bijection": True,
        }


def wedge_applies(L: CosimplicialGroup) -> bool:
    """Free and gamma:q families: degeneracies insert identity coordinates."""
    return L.descriptor == "free" or L.descriptor.startswith("gamma:")


def wedge_check(space: SimplicialHomSpace, n: int, t: int) -> WedgeReport:
    """η_n on S_t \\ S_{t+1}: project away the t identity coordinates.

    The stratum must be in bijection with (choice of kept coordinates) x
    (identity-free tuples one level down t times), and the composite of
    degeneracies s_{j_1 - 1}, ..., s_{j_t - 1} (identity positions
    j_1 < ... < j_t, applied in that order) must invert it.
    """
    if not wedge_applies(space.family):
        raise ValueError("the wedge bijection is implemented for the free and gamma:q families only")
    tiers, levels = space.tiers, space.levels
    k = n - t
    here = np.flatnonzero(tiers[n] == t)
    tuples = levels[n].tuples[here]
    free_below = np.flatnonzero(tiers[k] == 0)
    # η: tuple -> (kept positions, index of the projection at level k)
    images: dict[tuple, list[int]] = {}
    for row, idx in zip(tuples, here):
        kept = tuple(int(p) for p in np.flatnonzero(row != 0))
        if len(kept) != k:
            raise BijectionFailure(
                f"tier {t} tuple has {n - len(kept)} identity coordinates",
                witness={"tuple": row.tolist(), "tier": t},
            )
        proj = levels[k].index_of(row[list(kept)])
        if proj < 0 or tiers[k][proj] != 0:
            raise BijectionFailure("projection leaves the identity-free part", witness={"tuple": row.tolist(), "kept": kept})
        images.setdefault((kept, proj), []).append(int(idx))
    expected = {(kept, int(p)) for kept in itertools.combinations(range(n), k) for p in free_below}
    if set(images) != expected or any(len(v) != 1 for v in images.values()):
        raise BijectionFailure(
            f"η_{n} is not a bijection on stratum t={t}",
            witness={"image_size": len(images), "target_size": len(expected)},
        )
    # inverse through the space's own degeneracy maps
    for (kept, proj), (idx,) in images.items():
        cur, lvl = proj, k
        for j in sorted(set(range(n)) - set(kept)):
            cur = int(space.degeneracies[lvl][j][cur])
            lvl += 1
        if cur != idx:
            raise BijectionFailure(
                "degeneracy composite does not invert η",
                witness={"kept": kept, "projection": proj, "got": cur, "expected": idx},
            )
    return WedgeReport(n, t, len(here), comb(n, t), len(free_below), comb(n, n - t))


# ---------------------------------------------------------------- conjugation

def conjugation_maps(space: SimplicialHomSpace, n: int) -> np.ndarray:
    """(|G|, |X_n|) index array: row g is the action x -> g x g^-1."""
    hs, g = space.levels[n], space.group
    conj = g.conj_table
    out = np.empty((g.order, len(hs)), dtype=np.int64)
    for el in range(g.order):
        idx = hs.lookup(conj[el][hs.tuples])
        if np.any(idx < 0):
            raise EquivarianceViolation(f"conjugation by {el} leaves level {n}")
        out[el] = idx
    return out


@dataclass
class OrbitSpace:
    level: int
    orbit_of: np.ndarray  # tuple index -> representative index
    representatives: list[int]
    burnside: int
    tier_counts: list[int]

    def __len__(self):
        return len(self.representatives)

    def to_json(self) -> dict:
        return {"n": self.level, "orbits": len(self), "burnside": self.burnside, "strata": self.tier_counts}


def conjugation_orbits(space: SimplicialHomSpace, n: int, maps: dict[int, np.ndarray] | None = None) -> OrbitSpace:
    """Orbits of simultaneous conjugation, with the Burnside cross-check."""
    act = maps[n] if maps is not None else conjugation_maps(space, n)
    orbit_of = act.min(axis=0)
    reps = np.unique(orbit_of).tolist()
    fixed = int((act == np.arange(act.shape[1])[None, :]).sum())
    order = space.group.order
    if fixed % order or fixed // order != len(reps):
        raise EquivarianceViolation(
            f"orbit count {len(reps)} disagrees with Burnside {fixed}/{order} at level {n}"
        )
    tiers = space.tiers[n]
    if np.any(tiers[act] != tiers[None, :]):
        raise EquivarianceViolation(f"conjugation changes a filtration tier at level {n}")
    counts = np.bincount(tiers[reps], minlength=n + 1).tolist() if reps else [0] * (n + 1)
    return OrbitSpace(n, orbit_of, reps, fixed // order, counts)


def check_equivariance(space: SimplicialHomSpace) -> dict[int, np.ndarray]:
    """g·d_i(x) = d_i(g·x) and g·s_i(x) = s_i(g·x) for all g, x, i."""
    maps = {n: conjugation_maps(space, n) for n in range(space.n_max + 1)}
    for n in range(1, space.n_max + 1):
        for i, f in enumerate(space.faces[n]):
            if np.any(f[maps[n]] != maps[n - 1][:, f]):
                raise EquivarianceViolation(f"d_{i} on level {n} is not conjugation-equivariant")
    for n in range(space.n_max):
        for i, s in enumerate(space.degeneracies[n]):
            if np.any(s[maps[n]] != maps[n + 1][:, s]):
                raise EquivarianceViolation(f"s_{i} on level {n} is not conjugation-equivariant")
    return maps


def group_map_check(small: SimplicialHomSpace, big: SimplicialHomSpace, embedding: np.ndarray) -> list[np.ndarray]:
    """Level-wise map Hom(L, H) -> Hom(L, G) along H -> G, commuting with faces and degeneracies."""
    maps = []
    for n, hs in enumerate(small.levels):
        idx = big.levels[n].lookup(embedding[hs.tuples])
        if np.any(idx < 0):
            raise CommutationFailure(f"level {n}: image of a homomorphism is not a homomorphism")
        maps.append(idx)
    for n in range(1, small.n_max + 1):
        for i in range(n + 1):
            if np.any(big.faces[n][i][maps[n]] != maps[n - 1][small.faces[n][i]]):
                raise CommutationFailure(f"d_{i} on level {n} does not commute with the group map")
    for n in range(small.n_max):
        for i in range(n + 1):
            if np.any(big.degeneracies[n][i][maps[n]] != maps[n + 1][small.degeneracies[n][i]]):
                raise CommutationFailure(f"s_{i} on level {n} does not commute with the group map")
    return maps


# ---------------------------------------------------------------- pushout

@dataclass
class PushoutReport:
    family: str
    cocycle: str
    group: str
    levels: list[dict]

    def to_json(self) -> dict:
        return {"family": self.family, "cocycle": self.cocycle, "group": self.group, "levels": self.levels}


def pushout_check(
    L: CosimplicialGroup, b: Word, group: FiniteGroup, n_max: int, mode: Mode | None = None, budget: int = DEFAULT_BUDGET
) -> PushoutReport:
    """Hom(L^b_n, G) = G x Hom(L_n, G), and the square

        Hom(L^b_n, G) -> Hom(F^+_n, G)
              |                 |
        Hom(L_n, G)   -> Hom(F_n, G)

    is a pullback of sets.
    """
    F = build_standard("free")
    Lb = build_Lb(L, b, mode)
    Fplus = build_Lb(F, Word.gen(0), mode)
    h = build_hb(L, b, n_max, mode)
    hplus = plus_morphism(h, Fplus, Lb)
    rows = []
    for n in range(n_max + 1):
        hom_L = enumerate_hom(L.level(n), group, budget=budget, cross_check=False)
        hom_Lb = enumerate_hom(Lb.level(n), group, budget=budget)
        hom_F = enumerate_hom(F.level(n), group, budget=budget)
        hom_Fp = enumerate_hom(Fplus.level(n), group, budget=budget)
        # free-product bijection
        if len(hom_Lb) != group.order * len(hom_L):
            raise PullbackFailure(
                f"level {n}: |Hom(L^b_n, G)| = {len(hom_Lb)} != {group.order} * {len(hom_L)}"
            )
        restrict = hom_L.lookup(hom_Lb.tuples[:, 1:])
        if np.any(restrict < 0):
            raise PullbackFailure(f"level {n}: a homomorphism of L^b_n does not restrict to L_n")
        pairs = set(zip(hom_Lb.tuples[:, 0].tolist(), restrict.tolist()))
        if len(pairs) != len(hom_Lb):
            raise PullbackFailure(f"level {n}: (a_0 image, restriction) is not injective")
        # the square
        down_right = induced_map(h.at(n), hom_L, hom_F)
        top = induced_map(hplus.at(n), hom_Lb, hom_Fp)
        right = hom_F.lookup(hom_Fp.tuples[:, 1:])
        if np.any(right < 0):
            raise PullbackFailure(f"level {n}: Hom(F^+_n) does not restrict to Hom(F_n)")
        if np.any(right[top] != down_right[restrict]):
            raise PullbackFailure(f"level {n}: the square does not commute")
        fibre = {}
        for y in range(len(hom_Fp)):
            fibre.setdefault(int(right[y]), []).append(y)
        product = {(x, y) for x in range(len(hom_L)) for y in fibre.get(int(down_right[x]), [])}
        corner = set(zip(restrict.tolist(), top.tolist()))
        if len(corner) != len(hom_Lb) or corner != product:
            raise PullbackFailure(
                f"level {n}: Hom(L^b_n, G) is not the fibre product",
                witness={"fibre_product": len(product), "corner": len(corner), "distinct": len(corner) == len(hom_Lb)},
            )
        rows.append({"n": n, "hom_L": len(hom_L), "hom_Lb": len(hom_Lb), "hom_Fplus": len(hom_Fp), "fibre_product": len(product)})
    names = L.level(1).names
    return PushoutReport(L.descriptor, b.format(names), group.name, rows)
