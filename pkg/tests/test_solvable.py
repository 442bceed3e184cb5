import numpy as np
import pytest

from homcx.groups import catalog_group, evaluate_word
from homcx.solvable import image, is_trivial
from homcx.words import Word, commutator, free_reduce, parse_word

x, y, z = Word.gen(0), Word.gen(1), Word.gen(2)


def test_depth_one_is_abelianisation():
    assert is_trivial(commutator(x, y), 2, 1)
    assert not is_trivial(x * y, 2, 1)
    assert image(x * y, 2, 1) == image(y * x, 2, 1)


def test_depth_two_is_metabelian():
    assert not is_trivial(commutator(x, y), 2, 2)
    assert is_trivial(commutator(commutator(x, y), commutator(x.inverse(), y)), 2, 2)
    assert not is_trivial(commutator(commutator(x, y), commutator(x.inverse(), y)), 2, 3)


def test_depth_three():
    inner = commutator(commutator(x, y), commutator(x.inverse(), y))
    outer = commutator(inner, commutator(commutator(y, x), commutator(y.inverse(), x)))
    assert is_trivial(outer, 2, 3)
    assert not is_trivial(inner, 2, 3)


@pytest.mark.parametrize("depth,group", [(1, "cyclic:6"), (2, "sym:3"), (2, "dihedral:8"), (3, "sym:4")])
def test_trivial_images_vanish_in_solvable_groups(depth, group):
    # derived length of the test group is <= depth, so trivial words evaluate to e
    g = catalog_group(group)
    rng = np.random.default_rng(depth)
    for _ in range(40):
        w = free_reduce([(int(rng.integers(2)), int(rng.choice([-1, 1]))) for _ in range(10)])
        if is_trivial(w, 2, depth):
            for _ in range(5):
                assert evaluate_word(g, w, rng.integers(0, g.order, size=2).tolist()) == 0
        # and w w^-1 is always trivial
        assert is_trivial(w * w.inverse(), 2, depth)


def test_nontrivial_detected_by_a_group():
    # [x, y] survives in S_3 so its image at depth 2 must be nontrivial
    s3 = catalog_group("sym:3")
    w = commutator(x, y)
    assert evaluate_word(s3, w, [1, 2]) != 0
    assert not is_trivial(w, 2, 2)
    assert is_trivial(parse_word("a1*a2*a1^-1*a2^-1"), 2, 1)
