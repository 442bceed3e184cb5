"""Brute-force reference computations that share no code with the package.

Everything here works on raw multiplication tables with plain Python sets
and loops, so agreement with the library is evidence rather than tautology.
"""

from __future__ import annotations

import itertools
from collections import Counter
from math import comb

import numpy as np


def _tab(mul):
    return np.asarray(mul).tolist()


def inverse_of(mul):
    t = _tab(mul)
    return [next(y for y in range(len(t)) if t[x][y] == 0) for x in range(len(t))]


def closure(mul, seed):
    t = _tab(mul)
    out = {0} | set(seed)
    while True:
        new = {t[x][y] for x in out for y in out} - out
        if not new:
            return out
        out |= new


def commutator_subgroup_of(mul, sub_a, sub_b):
    t, inv = _tab(mul), inverse_of(mul)
    comms = {t[t[inv[x]][inv[y]]][t[x][y]] for x in sub_a for y in sub_b}
    return closure(mul, comms)


def nilpotency_class(mul, gens):
    """Class of <gens> by its lower central series, or None if it stalls above {e}."""
    h = closure(mul, gens)
    term, c = h, 0
    while term != {0}:
        nxt = commutator_subgroup_of(mul, term, h)
        if nxt == term:
            return None
        term, c = nxt, c + 1
    return c


def derived_length(mul, gens):
    term, d = closure(mul, gens), 0
    while term != {0}:
        nxt = commutator_subgroup_of(mul, term, term)
        if nxt == term:
            return None
        term, d = nxt, d + 1
    return d


def conjugacy_classes(mul):
    t, inv = _tab(mul), inverse_of(mul)
    seen, classes = set(), []
    for x in range(len(t)):
        if x in seen:
            continue
        cls = {t[t[g][x]][inv[g]] for g in range(len(t))}
        seen |= cls
        classes.append(cls)
    return classes


def commuting_tuples(mul, n):
    t = _tab(mul)
    return [
        tup
        for tup in itertools.product(range(len(t)), repeat=n)
        if all(t[x][y] == t[y][x] for x, y in itertools.combinations(tup, 2))
    ]


def class_bounded_tuples(mul, n, c):
    """Tuples generating a subgroup of nilpotency class <= c."""
    out = []
    for tup in itertools.product(range(len(mul)), repeat=n):
        k = nilpotency_class(mul, tup)
        if k is not None and k <= c:
            out.append(tup)
    return out


def conjugation_orbit_count(mul, tuples):
    t, inv = _tab(mul), inverse_of(mul)
    seen, count = set(), 0
    for tup in tuples:
        if tup in seen:
            continue
        count += 1
        for g in range(len(t)):
            seen.add(tuple(t[t[g][x]][inv[g]] for x in tup))
    return count


def element_order(mul, x):
    t, k, y = _tab(mul), 1, x
    while y != 0:
        y, k = t[y][x], k + 1
    return k


def abelianization_invariants(mul):
    """Invariant factors of G/[G,G], from element-order counts of the quotient."""
    t = _tab(mul)
    derived = commutator_subgroup_of(mul, range(len(t)), range(len(t)))
    cosets, rep_of = [], {}
    for x in range(len(t)):
        if x in rep_of:
            continue
        coset = frozenset(t[x][d] for d in derived)
        for y in coset:
            rep_of[y] = len(cosets)
        cosets.append(x)
    q = len(cosets)
    qmul = [[rep_of[t[cosets[i]][cosets[j]]] for j in range(q)] for i in range(q)]
    ident = rep_of[0]
    # primary parts: for each p, count solutions of x^(p^k) = e to read off the partition
    primes = [p for p in range(2, q + 1) if q % p == 0 and all(p % r for r in range(2, p))]
    elementary = []
    for p in primes:
        e = 0
        while q % p ** (e + 1) == 0:
            e += 1
        counts = []
        for k in range(e + 1):
            counts.append(sum(1 for x in range(q) if _qpow(qmul, x, p**k, ident) == ident))
        # counts[k] = p^(sum_i min(k, lambda_i)); differences give #parts >= k
        logs = [round(np.log(c) / np.log(p)) for c in counts]
        at_least = [logs[k] - logs[k - 1] for k in range(1, e + 1)]
        parts = []
        for k in range(1, e + 1):
            exactly = at_least[k - 1] - (at_least[k] if k < e else 0)
            parts += [p**k] * exactly
        elementary.append(sorted(parts, reverse=True))
    width = max((len(x) for x in elementary), default=0)
    factors = []
    for i in range(width):
        f = 1
        for parts in elementary:
            if i < len(parts):
                f *= parts[i]
        factors.append(f)
    return tuple(sorted(factors))


def _qpow(qmul, x, k, ident):
    y = ident
    for _ in range(k):
        y = qmul[y][x]
    return y


def wedge_count(n, t, identity_free_below):
    return comb(n, t) * identity_free_below


def cyclic2_homology_dims(max_dim):
    """H_k(Z/2; Z): Z, then Z/2 in odd degrees and 0 in positive even degrees."""
    out = ["Z"]
    for k in range(1, max_dim):
        out.append("Z/2" if k % 2 else "0")
    return out


def kron(a, b):
    m, n = len(a), len(b)
    return [[a[i // n][k // n] * b[i % n][k % n] for k in range(m * n)] for i in range(m * n)]


def perm_apply(p, a):
    """P A P^T with P[p(i)][i] = 1, entrywise: (σ·A)[p(i)][p(j)] = A[i][j]."""
    k = len(a)
    out = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            out[p[i] - 1][p[j] - 1] = a[i][j]
    return out


def class_sizes(mul):
    return sorted(Counter(len(c) for c in conjugacy_classes(mul)).elements())


def unitriangular(rng, size, bound=3):
    """Random integer upper unitriangular matrix; UT(size) has class size - 1."""
    m = [[int(i == j) for j in range(size)] for i in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            m[i][j] = int(rng.integers(-bound, bound + 1))
    return m


def _matmul(a, b):
    k = len(a)
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(k)] for i in range(k)]


def _ut_inverse(m):
    # (I + N)^-1 = sum (-N)^k for nilpotent N
    k = len(m)
    n = [[m[i][j] - int(i == j) for j in range(k)] for i in range(k)]
    out = [[int(i == j) for j in range(k)] for i in range(k)]
    term = [row[:] for row in out]
    for _ in range(k):
        term = _matmul(term, [[-x for x in row] for row in n])
        out = [[out[i][j] + term[i][j] for j in range(k)] for i in range(k)]
    return out


def evaluate_matrix_word(letters, mats):
    """Letters are (generator, exponent) pairs."""
    k = len(mats[0])
    acc = [[int(i == j) for j in range(k)] for i in range(k)]
    for g, e in letters:
        base = mats[g] if e > 0 else _ut_inverse(mats[g])
        for _ in range(abs(e)):
            acc = _matmul(acc, base)
    return acc
