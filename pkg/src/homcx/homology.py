"""Integral homology of B(L, G) through the normalized chain complex."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BoundarySquareNonzero, BudgetExceeded, VerificationError
from .homspace import SimplicialHomSpace
from .snf import SNF, sparse_smith_normal_form

DEFAULT_BASIS_BUDGET = 20000

Column = dict[int, int]


@dataclass
class ChainComplex:
    """basis[k] lists level-k tuple indices of tier 0; boundary[k] maps C_k -> C_{k-1} column-wise."""

    descriptor: str
    max_dim: int
    basis: list[np.ndarray]
    boundary: list[list[Column]]  # boundary[0] is empty

    def rank(self, k: int) -> int:
        return len(self.basis[k])

    def rows(self, k: int) -> list[Column]:
        """Row-dict form of boundary[k]."""
        out: list[Column] = [{} for _ in range(self.rank(k - 1))]
        for j, col in enumerate(self.boundary[k]):
            for i, x in col.items():
                out[i][j] = x
        return out


def normalized_complex(space: SimplicialHomSpace, max_dim: int, budget: int = DEFAULT_BASIS_BUDGET) -> ChainComplex:
    if max_dim > space.n_max:
        raise ValueError(f"space is built to level {space.n_max}, need {max_dim}")
    tiers = space.tiers
    basis = [np.flatnonzero(tiers[k] == 0) for k in range(max_dim + 1)]
    for k, b in enumerate(basis):
        if len(b) > budget:
            raise BudgetExceeded(f"{len(b)} nondegenerate {k}-simplices exceed the budget {budget}")
    position = []
    for k in range(max_dim + 1):
        pos = np.full(len(space.levels[k]), -1, dtype=np.int64)
        pos[basis[k]] = np.arange(len(basis[k]))
        position.append(pos)
    boundary: list[list[Column]] = [[{} for _ in basis[0]]]
    for k in range(1, max_dim + 1):
        faces = np.stack([f[basis[k]] for f in space.faces[k]]) if len(basis[k]) else np.zeros((k + 1, 0), dtype=np.int64)
        cols: list[Column] = []
        for j in range(len(basis[k])):
            col: Column = {}
            for i in range(k + 1):
                p = int(position[k - 1][faces[i, j]])
                if p >= 0:
                    col[p] = col.get(p, 0) + (-1) ** i
            cols.append({r: x for r, x in col.items() if x})
        boundary.append(cols)
    cc = ChainComplex(space.family.descriptor, max_dim, basis, boundary)
    check_boundary_square(cc)
    return cc


def check_boundary_square(cc: ChainComplex) -> None:
    for k in range(2, cc.max_dim + 1):
        lower = cc.boundary[k - 1]
        for j, col in enumerate(cc.boundary[k]):
            acc: Column = {}
            for r, x in col.items():
                for r2, y in lower[r].items():
                    acc[r2] = acc.get(r2, 0) + x * y
            if any(acc.values()):
                raise BoundarySquareNonzero(f"∂{k - 1}∂{k} is nonzero on basis simplex {j}", witness={"dim": k, "column": j})


@dataclass(frozen=True)
class HomologyGroup:
    betti: int
    torsion: tuple[int, ...]

    def __str__(self):
        parts = (["Z" if self.betti == 1 else f"Z^{self.betti}"] if self.betti else []) + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self, dim: int) -> dict:
        return {"dim": dim, "betti": self.betti, "torsion": list(self.torsion)}


def boundary_snf(cc: ChainComplex, k: int) -> SNF:
    return sparse_smith_normal_form((cc.rank(k - 1), cc.rank(k)), cc.rows(k))


def homology(cc: ChainComplex) -> list[HomologyGroup]:
    """H_k for k < max_dim; the top dimension lacks its incoming boundary and is omitted."""
    snfs = {k: boundary_snf(cc, k) for k in range(1, cc.max_dim + 1)}
    out = []
    for k in range(cc.max_dim):
        rank_out = snfs[k].rank if k >= 1 else 0
        into = snfs[k + 1]
        out.append(HomologyGroup(cc.rank(k) - rank_out - into.rank, into.torsion))
    if cc.max_dim >= 1 and out:
        comps = components(cc)
        if out[0].betti != comps:
            raise VerificationError(f"H_0 rank {out[0].betti} != {comps} components of the 1-skeleton")
    return out


def components(cc: ChainComplex) -> int:
    """Connected components of the graph of vertices and nondegenerate edges."""
    parent = list(range(cc.rank(0)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for col in cc.boundary[1]:
        ends = list(col)
        for e in ends[1:]:
            parent[find(e)] = find(ends[0])
    # a nondegenerate edge with equal endpoints has zero boundary and joins nothing
    return len({find(x) for x in range(cc.rank(0))})


def euler_truncated(cc: ChainComplex) -> int:
    return sum((-1) ** k * cc.rank(k) for k in range(cc.max_dim + 1))


def homology_report(cc: ChainComplex, groups: list[HomologyGroup]) -> dict:
    return {
        "space": cc.descriptor,
        "max_dim": cc.max_dim,
        "reliable_dims": list(range(cc.max_dim)),
        "groups": [g.to_json(k) for k, g in enumerate(groups)],
    }
