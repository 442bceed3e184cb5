import numpy as np
import pytest

import oracles
from homcx.errors import DiagramFailure, DimensionMismatch
from homcx.irig import (
    act,
    as_matrix,
    bipermutative_check,
    block_sum,
    coherence_check,
    compose,
    identity_matrix,
    identity_perm,
    kronecker,
    left_distributivity_direct,
    left_distributivity_shuffle,
    random_instance,
    random_permutation_matrix,
    tau,
    tau_formula_table,
    tau_times,
)


def test_tau_examples():
    assert tau(2, 1) == (2, 3, 1)
    assert tau(3, 0) == identity_perm(3)
    assert tau_times(2, 2) == (1, 3, 2, 4)
    assert tau_times(1, 4) == identity_perm(4)


def test_formula_table():
    assert all(tau_formula_table(5).values())


def test_matrix_helpers():
    assert np.array_equal(block_sum(identity_matrix(2), identity_matrix(3)), identity_matrix(5))
    b = as_matrix([[1, 2], [3, 4]])
    assert kronecker(identity_matrix(3), b).tolist() == block_sum(block_sum(b, b), b).tolist()
    assert kronecker(as_matrix([[0, 1], [1, 0]]), as_matrix([[2]])).tolist() == [[0, 2], [2, 0]]


def test_kron_and_action_against_oracle():
    rng = np.random.default_rng(5)
    for _ in range(20):
        a, b, _, _ = random_instance(rng, 4)
        assert kronecker(a, b).tolist() == oracles.kron(a.tolist(), b.tolist())
        p = tuple(int(x) + 1 for x in rng.permutation(a.shape[0]))
        assert act(p, a).tolist() == oracles.perm_apply(p, a.tolist())


def test_identity_matrices_pass():
    for m in range(1, 4):
        for n in range(1, 4):
            assert bipermutative_check(identity_matrix(m), identity_matrix(n)).passed


@pytest.mark.parametrize("seed", range(10))
def test_random_instances(seed):
    rng = np.random.default_rng(seed)
    for _ in range(10):
        a, b, a2, b2 = random_instance(rng, 5)
        assert bipermutative_check(a, b, a2, b2).passed


def test_permutation_matrices():
    rng = np.random.default_rng(11)
    for _ in range(10):
        m, n = (int(x) for x in rng.integers(1, 6, size=2))
        assert bipermutative_check(random_permutation_matrix(rng, m), random_permutation_matrix(rng, n)).passed


def test_right_distributivity_is_strict():
    a, a2, b = as_matrix([[1, 2], [3, 4]]), as_matrix([[5]]), as_matrix([[0, 1], [7, 2]])
    assert np.array_equal(kronecker(block_sum(a, a2), b), block_sum(kronecker(a, b), kronecker(a2, b)))
    # left distributivity is not strict: a conjugation is needed
    lhs = kronecker(b, block_sum(a, a2))
    rhs = block_sum(kronecker(b, a), kronecker(b, a2))
    assert not np.array_equal(lhs, rhs)
    assert np.array_equal(act(left_distributivity_shuffle(2, 2, 1), lhs), rhs)


def test_shuffle_formula_matches_bookkeeping():
    for m in range(1, 5):
        for n in range(1, 5):
            for n2 in range(1, 5):
                assert left_distributivity_shuffle(m, n, n2) == left_distributivity_direct(m, n, n2)


def test_coherence():
    a = as_matrix([[1, 2], [3, 4]])
    assert coherence_check(a, 4, (2, 1, 3, 4), (2, 1, 4, 3))
    with pytest.raises(ValueError):
        coherence_check(a, 4, (1, 2, 3, 4), (2, 1, 3, 4))


def test_errors():
    with pytest.raises(DimensionMismatch):
        compose((1, 2), (1, 2, 3))
    with pytest.raises(DimensionMismatch):
        act((1, 2), identity_matrix(3))
    with pytest.raises(DimensionMismatch):
        block_sum(as_matrix([[1, 2]]), identity_matrix(1))


def test_failure_reports_witness(monkeypatch):
    import homcx.irig as irig

    monkeypatch.setattr(irig, "tau", lambda m, n: identity_perm(m + n))
    with pytest.raises(DiagramFailure) as info:
        irig.bipermutative_check(as_matrix([[1]]), as_matrix([[2]]))
    assert info.value.witness["diagram"].startswith("tau")
