import time

import pytest

from homcx.cosimplicial import (
    Auto,
    Pointwise,
    Symbolic,
    build_b_sequence,
    build_hb,
    build_Lb,
    build_standard,
    check_homomorphism,
    cocycle_check,
    cosimplicial_identities,
    default_catalog,
    derived_relators,
    gamma_relators,
    parse_family,
    scan_cocycles,
    verify_cosimplicial_identities,
    verify_morphism,
)
from homcx.errors import (
    CocycleNotVerified,
    ConfigError,
    IdentityViolation,
    LevelOutOfRange,
    UndecidableLevel,
    UnsupportedFamilyParameter,
)
from homcx.wordproblem import Verdict
from homcx.words import Word, commutator, parse_word

a1, a2 = Word.gen(0), Word.gen(1)


@pytest.fixture(scope="module")
def catalog():
    return default_catalog(24)


def test_free_cofaces():
    F = build_standard("free")
    assert F.coface(2, 1).images == (a1 * a2,)
    assert F.coface(2, 0).images == (a2,)
    assert F.coface(2, 2).images == (a1,)
    assert F.codegeneracy(1, 0).images == (Word(), a1)


def test_gamma_relators():
    assert gamma_relators(1, 2) == []
    assert gamma_relators(2, 2) == [commutator(a1, a2)]
    assert len(gamma_relators(2, 3)) == 4
    assert list(build_standard("gamma:2").level(2).relators) == [commutator(a1, a2)]


def test_derived_relators_are_trivial_in_the_kind():
    from homcx.wordproblem import is_identity

    L = build_standard("derived:2")
    p = L.level(3)
    assert all(is_identity(p, r) is Verdict.EQUAL for r in derived_relators(3, 2))


def test_sigma23_relators():
    L = build_standard("sigma23")
    a, b = Word.gen(0), Word.gen(1)
    assert a * b * a * (b * a * b).inverse() in L.level(2).relators
    assert L.truncation == 2
    with pytest.raises(LevelOutOfRange):
        L.level(3)


@pytest.mark.parametrize("family", ["free", "freebar", "gamma:2", "gamma:3", "gamma:4", "derived:2"])
def test_identities_symbolic(family):
    rep = verify_cosimplicial_identities(build_standard(family), 5)
    assert rep.passed and rep.checked == rep.symbolic == 124


def test_identity_count_grows():
    F = build_standard("free")
    assert len(list(cosimplicial_identities(F, 2))) < len(list(cosimplicial_identities(F, 3)))


def test_sigma23_symbolic_reports_undecidable(catalog):
    L = build_standard("sigma23")
    with pytest.raises(UndecidableLevel):
        verify_cosimplicial_identities(L, 2)
    rep = verify_cosimplicial_identities(L, 2, strict=False)
    assert len(rep.undecidable) == 3 and all("L0->L2" in u for u in rep.undecidable)
    auto = verify_cosimplicial_identities(L, 2, Auto(catalog))
    assert auto.passed and auto.pointwise == 3


def test_broken_family_is_caught():
    from homcx.cosimplicial import CosimplicialGroup, _free_coface, _free_codegeneracy
    from homcx.presentation import Free, Presentation

    def bad_coface(n, i):
        imgs = _free_coface(n, i)
        if n == 2 and i == 1:
            return [a2 * a1]  # wrong order of the product
        return imgs

    L = CosimplicialGroup("bad", lambda n: Presentation(n, kind=Free()), bad_coface, _free_codegeneracy)
    with pytest.raises(IdentityViolation) as info:
        verify_cosimplicial_identities(L, 3)
    assert info.value.witness["identity"]


def test_descriptor_errors():
    with pytest.raises(UnsupportedFamilyParameter):
        build_standard("gamma:1")
    with pytest.raises(ConfigError):
        build_standard("gamma:x")
    with pytest.raises(ConfigError):
        build_standard("other")
    with pytest.raises(ConfigError):
        parse_family("lb:free")


def test_cocycle_examples(catalog):
    F = build_standard("free")
    assert cocycle_check(F, a1).status == "Verified"
    assert cocycle_check(F, a1**2).status == "Refuted"
    assert cocycle_check(F, Word()).status == "Verified"
    inv = build_standard("sigma23:involutive")
    s1s2 = parse_word("s1*s2", ("s1", "s2"))
    assert cocycle_check(inv, s1s2).status == "Inconclusive"
    assert cocycle_check(inv, s1s2, Pointwise(catalog)).status == "Verified"
    literal = cocycle_check(build_standard("sigma23"), s1s2, Pointwise(catalog))
    assert literal.status == "Refuted" and literal.witness["group"]


def test_scan_cocycles():
    fmt = lambda ws: [w.format() for w in ws]  # noqa: E731
    assert fmt(scan_cocycles(build_standard("free"), 5)) == ["e", "a1"]
    gamma2 = fmt(scan_cocycles(build_standard("gamma:2"), 5))
    assert set(gamma2) == {Word.gen(0, m).format() for m in range(-5, 6)}
    for q in (3, 4):
        assert fmt(scan_cocycles(build_standard(f"gamma:{q}"), 5)) == ["e", "a1"]


def test_b_sequence():
    F, G2 = build_standard("free"), build_standard("gamma:2")
    assert build_b_sequence(F, a1, 1) == a1
    assert build_b_sequence(F, a1, 2) == a1
    assert build_b_sequence(G2, a1**2, 2) == a1**2
    with pytest.raises(ValueError):
        build_b_sequence(F, a1, 0)


def test_lb_construction():
    F = build_standard("free")
    Lb = build_Lb(F, a1)
    assert Lb.level(1).names == ("a0", "a1")
    assert Lb.coface(1, 0).images[0] == Word.gen(0) * Word.gen(1)
    Le = build_Lb(F, Word())
    assert Le.coface(1, 0).images[0] == Word.gen(0)
    G2 = build_Lb(build_standard("gamma:2"), a1**2)
    assert G2.coface(1, 0).images[0] == Word.gen(0) * Word.gen(1, 2)
    with pytest.raises(CocycleNotVerified):
        build_Lb(F, a1**2)
    assert parse_family("lb:gamma:2:a1^2").descriptor == "lb:gamma:2:a1^2"


def test_hb_examples(catalog):
    F = build_standard("free")
    h = build_hb(F, a1, 4)
    for n in range(5):
        assert h.at(n).images == tuple(Word.gen(j) for j in range(n))
    hq = build_hb(build_standard("gamma:3"), a1, 3)
    assert hq.at(3).images == tuple(Word.gen(j) for j in range(3))
    inv = build_standard("sigma23:involutive")
    hs = build_hb(inv, parse_word("s1*s2", ("s1", "s2")), 2, Auto(catalog))
    assert hs.at(1).images[0].format(("s1", "s2")) == "s1*s2"
    assert verify_morphism(hs, 2, Auto(catalog)) > 0


def test_homomorphism_checks(catalog):
    inv, lit = build_standard("sigma23:involutive"), build_standard("sigma23")
    assert check_homomorphism(inv.coface(2, 0), Auto(catalog)).verdict is Verdict.EQUAL
    assert check_homomorphism(lit.coface(2, 0), Auto(catalog)).verdict is Verdict.NOT_EQUAL
    assert check_homomorphism(build_standard("gamma:3").coface(3, 1)).verdict is Verdict.EQUAL


def test_symbolic_suite_runtime():
    start = time.perf_counter()
    for fam in ["free", "freebar", "gamma:2", "gamma:3", "gamma:4", "derived:2"]:
        verify_cosimplicial_identities(build_standard(fam), 5, Symbolic())
    assert time.perf_counter() - start < 60
