"""Block sum, tensor product and the shuffle permutations relating them.

Permutations are 1-based image tuples.  A permutation ``σ`` acts on square
matrices by ``σ·A = P_σ A P_σ^-1`` where ``P_σ[σ(i)][i] = 1``; matrices
are numpy arrays of Python ints, so arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DiagramFailure, DimensionMismatch

Permutation = tuple[int, ...]


def identity_perm(k: int) -> Permutation:
    return tuple(range(1, k + 1))


def is_permutation(p) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p ∘ q``: apply q first."""
    if len(p) != len(q):
        raise DimensionMismatch(f"cannot compose permutations of {len(p)} and {len(q)} points")
    return tuple(p[q[i] - 1] for i in range(len(q)))


def inverse_perm(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, x in enumerate(p, start=1):
        out[x - 1] = i
    return tuple(out)


def perm_sum(p: Permutation, q: Permutation) -> Permutation:
    """``p ⊕ q`` on {1..len(p)+len(q)}."""
    return tuple(p) + tuple(x + len(p) for x in q)


def tau(m: int, n: int) -> Permutation:
    """i -> n + i for i <= m, i -> i - m otherwise."""
    if m < 0 or n < 0:
        raise ValueError("tau needs m, n >= 0")
    return tuple(n + i if i <= m else i - m for i in range(1, m + n + 1))


def tau_times(m: int, n: int) -> Permutation:
    """(i - 1) n + j -> (j - 1) m + i."""
    if m < 1 or n < 1:
        raise ValueError("tau_times needs m, n >= 1")
    out = [0] * (m * n)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            out[(i - 1) * n + j - 1] = (j - 1) * m + i
    return tuple(out)


def as_matrix(rows) -> np.ndarray:
    a = np.array(rows, dtype=object)
    if a.ndim != 2:
        raise DimensionMismatch("matrix must be two-dimensional")
    return a


def identity_matrix(k: int) -> np.ndarray:
    out = np.zeros((k, k), dtype=object)
    for i in range(k):
        out[i, i] = 1
    return out


def perm_matrix(p: Permutation) -> np.ndarray:
    k = len(p)
    out = np.zeros((k, k), dtype=object)
    for i, x in enumerate(p):
        out[x - 1, i] = 1
    return out


def act(p: Permutation, a: np.ndarray) -> np.ndarray:
    """σ·A = P A P^-1 (P^-1 = P^T for a permutation matrix)."""
    _square(a)
    if len(p) != a.shape[0]:
        raise DimensionMismatch(f"permutation on {len(p)} points cannot act on a {a.shape[0]}x{a.shape[0]} matrix")
    pm = perm_matrix(p)
    return pm.dot(a).dot(pm.T)


def _square(a: np.ndarray):
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")


def block_sum(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    _square(a)
    _square(b)
    m, n = a.shape[0], b.shape[0]
    out = np.zeros((m + n, m + n), dtype=object)
    out[:m, :m] = a
    out[m:, m:] = b
    return out


def kronecker(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Entry ((i-1)n + j, (k-1)n + l) is a[i,k] * b[j,l]."""
    _square(a)
    _square(b)
    m, n = a.shape[0], b.shape[0]
    out = np.zeros((m * n, m * n), dtype=object)
    for i in range(m):
        for k in range(m):
            out[i * n : (i + 1) * n, k * n : (k + 1) * n] = a[i, k] * b
    return out


def left_distributivity_shuffle(m: int, n: int, n2: int) -> Permutation:
    """σ with σ·(A ⊗ (B ⊕ B')) = (A ⊗ B) ⊕ (A ⊗ B'), as (τ×_{n,m} ⊕ τ×_{n',m}) ∘ τ×_{m,n+n'}."""
    return compose(perm_sum(tau_times(n, m), tau_times(n2, m)), tau_times(m, n + n2))


def left_distributivity_direct(m: int, n: int, n2: int) -> Permutation:
    """The same shuffle by index bookkeeping: (i, k) lands in the A⊗B or A⊗B' block."""
    out = []
    for i in range(1, m + 1):
        for k in range(1, n + n2 + 1):
            out.append((i - 1) * n + k if k <= n else m * n + (i - 1) * n2 + (k - n))
    return tuple(out)


@dataclass
class DiagramReport:
    m: int
    n: int
    checks: dict[str, bool] = field(default_factory=dict)
    shuffle: Permutation | None = None

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "checks": self.checks, "left_shuffle": list(self.shuffle or ())}


def _require(report: DiagramReport, name: str, lhs: np.ndarray, rhs: np.ndarray):
    if lhs.shape != rhs.shape or not np.array_equal(lhs, rhs):
        diff = (lhs - rhs).tolist() if lhs.shape == rhs.shape else None
        raise DiagramFailure(f"{name} fails for m={report.m}, n={report.n}", witness={"diagram": name, "difference": diff})
    report.checks[name] = True


def bipermutative_check(a, b, a2=None, b2=None) -> DiagramReport:
    """Symmetry of ⊕ and ⊗ under τ, τ×, and both distributivity laws.

    ``a2`` and ``b2`` are the second summands for right and left
    distributivity; they default to ``a`` and ``b``.
    """
    a, b = as_matrix(a), as_matrix(b)
    a2 = a if a2 is None else as_matrix(a2)
    b2 = b if b2 is None else as_matrix(b2)
    for x in (a, b, a2, b2):
        _square(x)
    m, n, n2 = a.shape[0], b.shape[0], b2.shape[0]
    report = DiagramReport(m, n)
    _require(report, "tau.(A+B) = B+A", act(tau(m, n), block_sum(a, b)), block_sum(b, a))
    _require(report, "tau_x.(AxB) = BxA", act(tau_times(m, n), kronecker(a, b)), kronecker(b, a))
    _require(report, "(A+A')xB = AxB + A'xB", kronecker(block_sum(a, a2), b), block_sum(kronecker(a, b), kronecker(a2, b)))
    sigma = left_distributivity_shuffle(m, n, n2)
    if sigma != left_distributivity_direct(m, n, n2):
        raise DiagramFailure("shuffle composite disagrees with direct bookkeeping", witness={"m": m, "n": n, "n2": n2})
    report.shuffle = sigma
    _require(report, "sigma.(Ax(B+B')) = AxB + AxB'", act(sigma, kronecker(a, block_sum(b, b2))), block_sum(kronecker(a, b), kronecker(a, b2)))
    return report


def coherence_check(a, k: int, sigma: Permutation, sigma2: Permutation) -> bool:
    """σ·i(A) = σ'·i(A) when σ and σ' agree on {1..m}; i pads A with an identity block."""
    a = as_matrix(a)
    m = a.shape[0]
    if tuple(sigma[:m]) != tuple(sigma2[:m]):
        raise ValueError("permutations must agree on 1..m")
    padded = block_sum(a, identity_matrix(k - m))
    return np.array_equal(act(sigma, padded), act(sigma2, padded))


def tau_formula_table(max_size: int) -> dict[str, bool]:
    """Formula and inverse checks for all 0 <= m, n <= max_size (tau_times from 1)."""
    out = {"tau_formula": True, "tau_inverse": True, "tau_times_formula": True, "tau_times_inverse": True}
    for m in range(max_size + 1):
        for n in range(max_size + 1):
            t = tau(m, n)
            out["tau_formula"] &= is_permutation(t) and all(
                t[i - 1] == (n + i if i <= m else i - m) for i in range(1, m + n + 1)
            )
            out["tau_inverse"] &= compose(tau(n, m), t) == identity_perm(m + n)
            if m and n:
                tx = tau_times(m, n)
                out["tau_times_formula"] &= is_permutation(tx) and all(
                    tx[(i - 1) * n + j - 1] == (j - 1) * m + i for i in range(1, m + 1) for j in range(1, n + 1)
                )
                out["tau_times_inverse"] &= compose(tau_times(n, m), tx) == identity_perm(m * n)
    return out


def random_instance(rng: np.random.Generator, max_size: int, entry_bound: int = 5):
    """Random square integer matrices A, A' (m x m) and B, B' (n x n, n' x n')."""
    m, n, n2 = (int(x) for x in rng.integers(1, max_size + 1, size=3))

    def mat(k):
        return as_matrix(rng.integers(-entry_bound, entry_bound + 1, size=(k, k)).tolist())

    return mat(m), mat(n), mat(m), mat(n2)


def random_permutation_matrix(rng: np.random.Generator, k: int) -> np.ndarray:
    return perm_matrix(tuple(int(x) + 1 for x in rng.permutation(k)))
