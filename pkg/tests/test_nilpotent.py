import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from homcx.errors import SizeGuardExceeded
from homcx.nilpotent import collect, hall_basis, magnus_collect, nf_inverse, nf_multiply, witt_number
from homcx.words import Word, commutator, free_reduce, parse_word


def test_witt_numbers():
    assert [witt_number(2, w) for w in range(1, 6)] == [2, 1, 2, 3, 6]
    assert [witt_number(3, w) for w in range(1, 5)] == [3, 3, 8, 18]


@pytest.mark.parametrize("n,c,size", [(2, 1, 2), (2, 2, 3), (2, 3, 5), (3, 3, 14), (4, 4, 90), (5, 4, 205)])
def test_basis_sizes(n, c, size):
    assert len(hall_basis(n, c)) == size


def test_basis_labels():
    b = hall_basis(2, 2)
    assert [b.label(i) for i in range(3)] == ["a1", "a2", "[a1,a2]"]


def test_size_guard():
    with pytest.raises(SizeGuardExceeded):
        hall_basis(6, 2)
    with pytest.raises(SizeGuardExceeded):
        hall_basis(2, 5)


def test_collection_examples():
    assert collect(parse_word("a1*a1^-1"), hall_basis(2, 2)) == (0, 0, 0)
    assert collect(parse_word("a2*a1"), hall_basis(2, 2)) == (1, 1, -1)
    b1 = hall_basis(2, 1)
    assert collect(parse_word("a1*a2") ** 2, b1) == collect(parse_word("a1^2*a2^2"), b1) == (2, 2)


def test_normal_form_words_round_trip():
    b = hall_basis(3, 3)
    rng = np.random.default_rng(0)
    for _ in range(20):
        w = _random_word(rng, 3, 8)
        v = collect(w, b)
        assert collect(b.normal_form_word(v), b) == v


def _random_word(rng, n, length):
    return free_reduce([(int(rng.integers(n)), int(rng.choice([-2, -1, 1, 2]))) for _ in range(length)])


@pytest.mark.parametrize("n,c", [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 3)])
def test_collection_matches_magnus(n, c):
    b = hall_basis(n, c)
    rng = np.random.default_rng(n * 10 + c)
    for _ in range(15):
        w = _random_word(rng, n, 10)
        assert collect(w, b) == magnus_collect(w, b)


@pytest.mark.parametrize("n,c", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_equal_normal_forms_agree_in_unitriangular_matrices(n, c):
    # UT(c + 1, Z) has class c: collected words must evaluate equally there
    b = hall_basis(n, c)
    rng = np.random.default_rng(7)
    for _ in range(10):
        w = _random_word(rng, n, 9)
        nf = b.normal_form_word(collect(w, b))
        mats = [oracles.unitriangular(rng, c + 1) for _ in range(n)]
        assert oracles.evaluate_matrix_word(w.letters, mats) == oracles.evaluate_matrix_word(nf.letters, mats)


def test_weight_c_plus_one_commutators_vanish():
    x, y, z = Word.gen(0), Word.gen(1), Word.gen(2)
    b = hall_basis(3, 2)
    assert collect(commutator(commutator(x, y), z), b) == (0,) * len(b)
    assert collect(commutator(x, y), b) != (0,) * len(b)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 2), st.sampled_from([-1, 1])), max_size=8),
       st.lists(st.tuples(st.integers(0, 2), st.sampled_from([-1, 1])), max_size=8))
def test_normal_form_arithmetic(a, b):
    basis = hall_basis(3, 3)
    x, y = free_reduce(a), free_reduce(b)
    cx, cy = collect(x, basis), collect(y, basis)
    assert nf_multiply(cx, cy, basis) == collect(x * y, basis)
    assert nf_inverse(cx, basis) == collect(x.inverse(), basis)
