from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from homcx.snf import dense_snf, smith_normal_form, sparse_smith_normal_form


def test_examples():
    assert smith_normal_form([[2, 0], [0, 3]]).invariants == (1, 6)
    assert smith_normal_form([[2, 4], [6, 8]]).invariants == (2, 4)
    z = smith_normal_form([[0, 0], [0, 0]])
    assert z.rank == 0 and z.invariants == ()
    assert smith_normal_form([]).rank == 0


def _minors_gcd(m, k):
    """gcd of all k x k minors: the determinantal-divisor oracle."""
    import itertools

    a = np.array(m, dtype=object)
    g = 0
    for rows in itertools.combinations(range(a.shape[0]), k):
        for cols in itertools.combinations(range(a.shape[1]), k):
            g = gcd(g, int(round(np.linalg.det(a[np.ix_(rows, cols)].astype(float)))))
    return g


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 2**31))
def test_determinantal_divisors(m, n, seed):
    rng = np.random.default_rng(seed)
    a = rng.integers(-6, 7, size=(m, n)).tolist()
    inv = smith_normal_form(a).invariants
    prod = 1
    for k in range(1, min(m, n) + 1):
        dk = _minors_gcd(a, k)
        if k <= len(inv):
            prod *= inv[k - 1]
            assert prod == dk
        else:
            assert dk == 0


def test_transforms_reproduce_diagonal():
    rng = np.random.default_rng(1)
    a = rng.integers(-5, 6, size=(6, 8)).tolist()
    diag, u, v, d = dense_snf(a, transforms=True)
    um = np.array(u, dtype=object).dot(np.array(a, dtype=object)).dot(np.array(v, dtype=object))
    assert um.tolist() == d
    assert abs(round(np.linalg.det(np.array(u, dtype=float)))) == 1


@pytest.mark.parametrize("seed", range(20))
def test_sparse_matches_dense(seed):
    rng = np.random.default_rng(seed)
    m, n = rng.integers(1, 30, size=2)
    a = (rng.integers(-2, 3, size=(m, n)) * (rng.random((m, n)) < 0.3)).tolist()
    rows = [{j: x for j, x in enumerate(r) if x} for r in a]
    assert sparse_smith_normal_form((m, n), rows) == smith_normal_form(a)


def test_divisibility_chain():
    inv = smith_normal_form([[4, 0, 0], [0, 6, 0], [0, 0, 10]]).invariants
    assert inv == (2, 2, 60)
    assert all(b % a == 0 for a, b in zip(inv, inv[1:]))
