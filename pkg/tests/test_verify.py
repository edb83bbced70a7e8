import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from torusjump import (DomainError, Fp, FreeComplex, GaloisField, Ideal, IndexingMode, LaurentRing,
                       NotATorusPoint, PolyMatrix, QQ, ZZ,
                       UnsupportedExtension, acyclic_off_top, betti_bounds, duality_check,
                       fiber_betti, jump_loci, koszul_torus, oracle_check, sample_points,
                       smith_normal_form, surface, twist, verify_components, verify_propagation,
                       wedge)
from torusjump.verify import CAVEAT, top_cohomology_check, locus_points, suggest_primes

from corpus import TOP_CONCENTRATED, build_corpus
from oracles import fiber_betti_prime_field, smith_divisors

CORPUS = build_corpus()
SPACE = IndexingMode.space
PERVERSE = IndexingMode.perverse()


# -- fiber oracle

def test_fiber_betti_examples():
    c = koszul_torus(2)
    assert fiber_betti(c, (1, 1)).betti == {0: 1, 1: 2, 2: 1}
    assert fiber_betti(c, (2, 3)).betti == {0: 0, 1: 0, 2: 0}
    assert fiber_betti(wedge(2), (2, 3)).betti == {0: 0, 1: 1}


def test_fiber_betti_errors():
    with pytest.raises(NotATorusPoint):
        fiber_betti(koszul_torus(2), (0, 1))
    with pytest.raises(UnsupportedExtension):
        GaloisField(2, 5)


def test_fiber_betti_in_extension_field():
    c = koszul_torus(2, Fp(2))
    F = GaloisField(2, 2)
    a = F.generator()
    fb = fiber_betti(c, (a, F.one()))
    assert fb.betti == {0: 0, 1: 0, 2: 0}
    assert fb.field == "F2^2"
    assert fiber_betti(c, (F.one(), F.one())).betti == {0: 1, 1: 2, 2: 1}


def test_fiber_betti_integer_complex_uses_rationals():
    assert fiber_betti(koszul_torus(2, ZZ), (2, 3)).betti == {0: 0, 1: 0, 2: 0}
    assert fiber_betti(koszul_torus(2, ZZ), (3, 1), Fp(2)).betti == {0: 1, 1: 2, 2: 1}


# -- propagation

def test_propagation_torus2_space():
    rep = verify_propagation(jump_loci(koszul_torus(2)), SPACE(2))
    for p in ("i", "ii", "iv", "v", "vi"):
        assert rep[p].status == "pass", p
    assert rep["iii"].status == "skipped" and "verify_components" in rep["iii"].reason
    assert rep["iv_purity"].status == "skipped"
    assert rep["vi"].witness == {"signed_euler": 0, "top_is_whole_torus": False}
    assert rep["iv"].witness["codim_top"] == 2
    assert rep.passed


def test_propagation_surface2_fails_signed_euler():
    rep = verify_propagation(jump_loci(surface(2)), SPACE(2))
    assert rep["vi"].status == "fail"
    assert rep["vi"].witness["signed_euler"] == -2
    assert not rep.passed


def test_propagation_wedge2_space1():
    rep = verify_propagation(jump_loci(wedge(2)), SPACE(1))
    for p in ("i", "ii", "iv", "v", "vi"):
        assert rep[p].status == "pass", p
    assert rep["vi"].witness == {"signed_euler": 1, "top_is_whole_torus": True}


def test_perverse_labels():
    rep = verify_propagation(jump_loci(koszul_torus(2)), PERVERSE)
    assert rep.mode == "perverse"
    assert rep["iv"].witness["chain"] == ["V^0", "V^-1", "V^-2"]
    assert rep.passed


def test_space_mode_must_be_in_range():
    with pytest.raises(ValueError):
        verify_propagation(jump_loci(koszul_torus(2)), SPACE(5))
    assert str(IndexingMode.parse("space:3")) == "space:3"
    assert IndexingMode.parse("Perverse").kind == "perverse"
    with pytest.raises(ValueError):
        IndexingMode.parse("spaces")


def test_failing_chain_is_reported():
    # R in degree 0 and nothing in degree 1: V^0 is everything, V^1 is empty
    R = LaurentRing(2, QQ)
    rep = verify_propagation(jump_loci(FreeComplex(R, 0, 1, {0: 1, 1: 0})), SPACE(1))
    assert rep["i"].status == "fail"
    assert rep["i"].witness["degrees"] == [0, 1]
    assert rep["v"].status == "fail"


def test_hand_product_satisfies_propagation():
    assert verify_propagation(jump_loci(CORPUS["hand_product"]), SPACE(1)).passed


def test_report_serializes():
    d = verify_propagation(jump_loci(koszul_torus(2)), SPACE(2)).to_dict()
    assert d["mode"] == "space:2"
    assert set(d["properties"]) == {"i", "ii", "iii", "iv", "iv_purity", "v", "vi"}
    assert d["passed"] is True


# -- components

def test_components_examples():
    l = jump_loci(koszul_torus(2))
    frag = verify_components(l, SPACE(2), [Ideal(l.ring, ["t1 - 1", "t2 - 1"])])
    assert frag["cover"].status == "pass"
    assert frag["iii"].status == "pass" and frag["iii"].witness["codims"] == [2]
    assert frag["iv_purity"].status == "pass"

    lt = jump_loci(twist(koszul_torus(2), (2, 1)))
    frag = verify_components(lt, SPACE(2), [Ideal(lt.ring, ["2*t1 - 1", "t2 - 1"])])
    assert all(frag[k].status == "pass" for k in frag)

    frag = verify_components(l, SPACE(2), [Ideal(l.ring, ["t1 - 1"])])
    assert frag["cover"].status == "fail"


def test_components_fill_report():
    l = jump_loci(koszul_torus(2))
    rep = verify_propagation(l, SPACE(2), [Ideal(l.ring, ["t1 - 1", "t2 - 1"])])
    assert rep["iii"].status == "pass" and rep["cover"].status == "pass"


# -- acyclicity

@pytest.mark.parametrize("N", [1, 2, 3])
def test_torus_is_acyclic_off_top(N):
    assert acyclic_off_top(koszul_torus(N), N)


def test_wedge_and_surface_acyclicity():
    assert acyclic_off_top(wedge(2), 1)
    res = acyclic_off_top(surface(2), 2)
    assert not res
    assert res.witness["degree"] == 1 and res.witness["clause"] == "rank"
    assert fiber_betti(surface(2), (2, 3, 5, 7))[1] == 2


def test_acyclicity_codim_clause():
    # Koszul complex on (a, ab): ranks add up, but I_1(d^0) = <t1 - 1> has codim 1 < 2
    R = LaurentRing(2, QQ)
    a, ab = "t1 - 1", "(t1 - 1)*(t2 - 1)"
    d0 = PolyMatrix.from_rows(R, [[a], [ab]])
    d1 = PolyMatrix.from_rows(R, [[f"-({ab})", a]])
    c = FreeComplex(R, 0, 2, {0: 1, 1: 2, 2: 1}, {0: d0, 1: d1})
    res = acyclic_off_top(c, 2)
    assert not res
    assert res.witness == {"position": 2, "degree": 0, "clause": "codim", "codim": 1, "required": 2}
    assert fiber_betti(c, (1, 5))[1] > 0
    assert acyclic_off_top(CORPUS["hand_square"], 0)


def test_acyclicity_rejects_integers_and_bad_degree():
    with pytest.raises(DomainError):
        acyclic_off_top(koszul_torus(2, ZZ), 2)
    with pytest.raises(ValueError):
        acyclic_off_top(koszul_torus(2), 1)


@pytest.mark.parametrize("name", list(CORPUS), ids=list(CORPUS))
def test_acyclicity_agrees_with_fibers(name):
    c = CORPUS[name]
    res = acyclic_off_top(c, c.hi)
    pts = sample_points(c.ring, 20, seed=7, extensions=False)
    generic = [p for p in pts if p != (1,) * c.num_vars]
    if res:
        # exactness off the top holds generically and at every point off the lower loci
        l = jump_loci(c)
        for x in generic:
            b = fiber_betti(c, x)
            for i in range(c.lo, c.hi):
                if b[i]:
                    assert l.contains(i, x)
        for i in range(c.lo, c.hi):
            assert l[i].dim.codim is not None and l[i].dim.codim >= 1
    elif res.witness["clause"] == "rank":
        deg = res.witness["degree"]
        assert any(fiber_betti(c, x)[deg] > 0 for x in generic)


# -- Smith normal form and duality

def test_smith_examples():
    assert smith_normal_form([[1, 0], [0, 1]]) == [1, 1]
    assert smith_normal_form([[2, 0], [0, 6]]) == [2, 6]
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]
    assert smith_normal_form([]) == []
    assert smith_normal_form([[0, 0]]) == []


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-20, 20), min_size=c, max_size=c), min_size=r, max_size=r))))
def test_smith_matches_sympy(rows):
    d = smith_normal_form(rows)
    assert d == smith_divisors(rows)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))


@pytest.mark.parametrize("N", [1, 2, 3])
def test_duality_torus(N):
    v = duality_check(koszul_torus(N, ZZ), N, [2, 3, 5, 7, 11])
    assert v.label == f"AbelianDuality({N})"
    assert v.caveat == CAVEAT
    assert v.cross_check_passed
    assert set(v.primes_tested) >= {2, 3, 5, 7, 11}


def test_duality_wedge_and_partial_label():
    v = duality_check(wedge(2, ZZ), 1, [2, 3, 5])
    assert v.label == "AbelianDuality(1)"
    v = duality_check(wedge(2, ZZ), 1, [2, 3, 5], full=False)
    assert v.label == "PartialAbelianDuality(1)"


def test_duality_surface_negative():
    v = duality_check(surface(2, ZZ), 2, [2, 3])
    assert v.label == "No"
    assert v.witness["field"] == "QQ" and v.witness["degree"] == 1
    assert "not_applicable" in v.cross_check
    assert v.to_dict()["caveat"] == CAVEAT


def test_duality_rejects_bad_input():
    with pytest.raises(DomainError):
        duality_check(koszul_torus(2), 2, [2])
    with pytest.raises(ValueError):
        duality_check(koszul_torus(2, ZZ), 2, [4])
    with pytest.raises(ValueError):
        duality_check(koszul_torus(2, ZZ), 2, [])


def test_auto_primes_pick_up_torsion():
    # t1 - 3 at t1 = 1 is -2: the prime 2 divides an elementary divisor
    R = LaurentRing(1, ZZ)
    c = FreeComplex(R, 0, 1, {0: 1, 1: 1}, {0: PolyMatrix.from_rows(R, [["t1 - 3"]])})
    assert 2 in suggest_primes(c, points=[(1,)])
    v = duality_check(c, 1, [5], auto_primes=True)
    assert v.positive and 5 in v.primes_tested


def test_duality_implies_space_propagation():
    for c, n in [(koszul_torus(2, ZZ), 2), (koszul_torus(3, ZZ), 3), (wedge(3, ZZ), 1)]:
        v = duality_check(c, n, [2, 3])
        assert v.positive
        for K in (QQ, Fp(2), Fp(3)):
            assert verify_propagation(jump_loci(c.with_coeff(K)), SPACE(n)).passed


def test_top_cohomology_check_on_torus():
    res = top_cohomology_check(koszul_torus(2), 2)
    assert res["passed"] and set(res["degrees"]) == {"0", "1", "2"}


# -- Betti bounds

def test_betti_bounds_examples():
    b = betti_bounds(jump_loci(koszul_torus(2)), 2, 0)
    assert b["betti"] == {"0": 1, "1": 2, "2": 1} and b["passed"]
    b = betti_bounds(jump_loci(wedge(2)), 1, 0)
    assert b["betti"] == {"0": 1, "1": 2} and b["passed"]
    b = betti_bounds(jump_loci(surface(2)), 2, 0)
    assert not b["passed"]
    assert b["checks"]["signed_euler"].status == "fail"
    assert b["checks"]["signed_euler"].witness == -2


def test_betti_bounds_with_defect():
    b = betti_bounds(jump_loci(koszul_torus(3)), 3, 1)
    assert b["checks"]["signed_euler"].status == "skipped"
    assert b["checks"]["b1"].witness == {"b1": 3, "bound": 2}


# -- sampling and oracle

def test_sample_points_deterministic_and_trivial_first():
    l = jump_loci(koszul_torus(2))
    a = sample_points(l.ring, 50, seed=3, loci=l)
    assert a == sample_points(l.ring, 50, seed=3, loci=l)
    assert a[0] == (1, 1) and len(a) == 50


def test_sample_points_over_fp_use_extensions():
    R = koszul_torus(2, Fp(2)).ring
    pts = sample_points(R, 50, seed=0)
    assert any(hasattr(x, "field") for p in pts for x in p)
    assert all(not hasattr(x, "field") for p in sample_points(R, 20, seed=0, extensions=False)
               for x in p)


def test_locus_points_lie_on_the_locus():
    l = jump_loci(twist(koszul_torus(2), (Fraction(1, 2), 3)))
    pts = locus_points(l.ideal(0), 3, random.Random(0))
    assert pts == [(2, Fraction(1, 3))]


@pytest.mark.parametrize("name", list(CORPUS), ids=list(CORPUS))
def test_euler_constancy_and_prime_field_oracle(name):
    c = CORPUS[name]
    chi = c.euler_characteristic()
    for x in sample_points(c.ring, 20, seed=1, extensions=False):
        fb = fiber_betti(c, x)
        assert fb.euler() == chi
        assert fb.betti == fiber_betti_prime_field(c, x)


@pytest.mark.parametrize("name", ["torus2_F2", "twist_2_3_F5", "wedge3", "surface2"])
def test_oracle_check_clean(name):
    res = oracle_check(CORPUS[name], count=30, seed=2)
    assert res.passed and res.points_tested == 30


def test_oracle_flags_a_wrong_locus():
    c = koszul_torus(2)
    wrong = jump_loci(twist(c, (2, 1)))
    wrong.complex = c
    res = oracle_check(c, loci=wrong, points=[(1, 1), (Fraction(1, 2), 1)])
    assert len(res.mismatches) == 6
