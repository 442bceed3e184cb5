"""Smith normal form over the integers.

Large sparse matrices are first shrunk by eliminating unit pivots (each one
contributes an invariant factor 1); the remainder is diagonalised densely
with smallest-absolute-value pivoting.  Everything is exact Python ``int``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

TRANSFORM_CHECK_LIMIT = 50

Matrix = list[list[int]]


@dataclass(frozen=True)
class SNF:
    invariants: tuple[int, ...]  # nonzero diagonal entries d_1 | d_2 | ...
    shape: tuple[int, int]

    @property
    def rank(self) -> int:
        return len(self.invariants)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariants if d > 1)


def _identity(k: int) -> Matrix:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner, cols = len(b), (len(b[0]) if b else 0)
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def dense_snf(matrix: Sequence[Sequence[int]], transforms: bool = False):
    """Diagonalise ``matrix``; with ``transforms`` also return U, V with U·M·V = D."""
    a = [[int(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    u = _identity(m) if transforms else None
    v = _identity(n) if transforms else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if v is not None:
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        ra, rs = a[dst], a[src]
        for k in range(n):
            if rs[k]:
                ra[k] += q * rs[k]
        if u is not None:
            ud, us = u[dst], u[src]
            for k in range(m):
                ud[k] += q * us[k]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in a:
            if row[src]:
                row[dst] += q * row[src]
        if v is not None:
            for row in v:
                row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            rest = [(abs(a[i][t]), i, None) for i in range(t + 1, m) if a[i][t]]
            rest += [(abs(a[t][j]), None, j) for j in range(t + 1, n) if a[t][j]]
            if rest:
                _, i, j = min(rest, key=lambda r: r[0])
                if i is not None:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            for k in range(n):
                a[t][k] = -a[t][k]
            if u is not None:
                u[t] = [-x for x in u[t]]
        t += 1
    diag = tuple(a[i][i] for i in range(min(m, n)) if a[i][i])
    if transforms:
        return diag, u, v, a
    return diag


def _sparse_unit_reduce(rows: list[dict[int, int]]) -> tuple[int, list[dict[int, int]]]:
    """Eliminate ±1 pivots; returns (number eliminated, remaining rows)."""
    rows = [dict(r) for r in rows if r]
    cols: dict[int, set[int]] = {}
    for i, r in enumerate(rows):
        for j in r:
            cols.setdefault(j, set()).add(i)
    alive = set(range(len(rows)))
    units = 0
    queue = sorted(alive, key=lambda i: len(rows[i]))
    changed = True
    while changed:
        changed = False
        for i in queue:
            if i not in alive:
                continue
            r = rows[i]
            pivot = next((j for j, x in sorted(r.items(), key=lambda kv: len(cols[kv[0]])) if abs(x) == 1), None)
            if pivot is None:
                continue
            pv = r[pivot]
            for k in list(cols[pivot]):
                if k == i:
                    continue
                rk = rows[k]
                q = rk[pivot] * pv  # pv = ±1 so division is multiplication
                for j, x in r.items():
                    y = rk.get(j, 0) - q * x
                    if y:
                        if j not in rk:
                            cols[j].add(k)
                        rk[j] = y
                    elif j in rk:
                        del rk[j]
                        cols[j].discard(k)
                if not rk:
                    alive.discard(k)
            for j in r:
                cols[j].discard(i)
            cols.pop(pivot, None)
            alive.discard(i)
            units += 1
            changed = True
        queue = sorted(alive, key=lambda i: len(rows[i]))
    return units, [rows[i] for i in sorted(alive)]


def smith_normal_form(matrix: Sequence[Sequence[int]], check_transforms: bool = True) -> SNF:
    """Invariant factors of a dense integer matrix.

    Up to 50x50 the unimodular transforms are tracked and ``U·M·V = D`` is
    re-multiplied as a check.
    """
    dense = [[int(x) for x in row] for row in matrix]
    shape = (len(dense), len(dense[0]) if dense else 0)
    if check_transforms and max(shape) <= TRANSFORM_CHECK_LIMIT:
        diag, u, v, d = dense_snf(dense, transforms=True)
        if _matmul(_matmul(u, dense), v) != d:
            raise AssertionError("Smith transforms do not reproduce the diagonal form")
        return SNF(_normalise(diag), shape)
    return sparse_smith_normal_form(shape, [{j: x for j, x in enumerate(row) if x} for row in dense])


def sparse_smith_normal_form(shape: tuple[int, int], rows: list[dict[int, int]]) -> SNF:
    """Invariant factors of a matrix given as one ``{column: value}`` dict per row."""
    units, rest = _sparse_unit_reduce(rows)
    used = sorted({j for r in rest for j in r})
    pos = {j: k for k, j in enumerate(used)}
    dense = [[0] * len(used) for _ in rest]
    for i, r in enumerate(rest):
        for j, x in r.items():
            dense[i][pos[j]] = x
    diag = dense_snf(dense) if dense and used else ()
    return SNF(_normalise((1,) * units + tuple(diag)), tuple(shape))


def _normalise(diag) -> tuple[int, ...]:
    """Restore the divisibility chain (diag(a, b) ~ diag(gcd, lcm))."""
    d = sorted(abs(x) for x in diag if x)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        d.sort()
    return tuple(d)
