import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from torusjump import (FreeComplex, Ideal, LaurentRing, NotATorusPoint, PolyMatrix, Polynomial, QQ,
                       ZZ, block_diagonal, determinantal_ideal, fiber_betti, fitting_ideal,
                       jump_loci, jumping_ideal, koszul_torus, membership, same_variety, shift,
                       surface, twist, wedge)
from torusjump.jumploci import euler_characteristic

from corpus import TWISTS, build_corpus

CORPUS = build_corpus()
POINT = lambda R, *gens: Ideal(R, list(gens))


# -- examples

def test_fitting_ideal_examples():
    c1 = koszul_torus(1)
    assert fitting_ideal(c1, 0) == POINT(c1.ring, "t1 - 1")
    zero = FreeComplex(LaurentRing(2, QQ), 0, 1, {0: 2, 1: 3})
    assert fitting_ideal(zero, 0).is_unit()
    c2 = koszul_torus(2)
    assert fitting_ideal(c2, 0) == POINT(c2.ring, "t1 - 1", "t2 - 1")
    assert fitting_ideal(c2, 5).is_unit() and fitting_ideal(c2, -3).is_unit()


def test_jumping_ideal_examples():
    c1 = koszul_torus(1)
    assert jumping_ideal(c1, 1) == POINT(c1.ring, "t1 - 1")
    assert jumping_ideal(wedge(2), 1).is_zero()
    zero = FreeComplex(LaurentRing(2, QQ), 0, 1, {0: 2, 1: 3})
    assert jumping_ideal(zero, 0).is_zero() and jumping_ideal(zero, 1).is_zero()


def test_jump_loci_torus2():
    l = jump_loci(koszul_torus(2))
    pt = POINT(l.ring, "t1 - 1", "t2 - 1")
    for i in (0, 1, 2):
        assert same_variety(l.ideal(i), pt)
        assert l[i].dim.dim == 0
        assert not l[i].whole_torus and not l[i].empty


def test_jump_loci_wedge2():
    l = jump_loci(wedge(2))
    assert same_variety(l.ideal(0), POINT(l.ring, "t1 - 1", "t2 - 1"))
    assert l[0].dim.dim == 0
    assert l[1].whole_torus and l[1].dim.dim == 2
    assert l[1].generically_nonvanishing


def test_jump_loci_twisted_circle():
    l = jump_loci(twist(koszul_torus(1), (2,)))
    for i in (0, 1):
        assert same_variety(l.ideal(i), POINT(l.ring, "t1 - 1/2"))
        assert l.contains(i, (Fraction(1, 2),)) and not l.contains(i, (1,))


def test_integer_complex_is_reduced_with_a_note():
    l = jump_loci(koszul_torus(2, ZZ))
    assert l.ring.coeff == QQ
    assert any("reduced to QQ" in n for n in l.notes)


def test_euler_examples():
    for N in (1, 2, 3):
        assert euler_characteristic(koszul_torus(N)) == 0
    assert euler_characteristic(wedge(2)) == -1
    assert euler_characteristic(surface(2)) == -2


def test_membership_examples():
    l = jump_loci(koszul_torus(2))
    assert membership(l, 1, (1, 1))
    assert not membership(l, 1, (2, 3))
    w = jump_loci(wedge(2))
    for x in [(1, 1), (2, 3), (-1, Fraction(1, 2))]:
        assert membership(w, 1, x)
    assert not membership(w, 7, (1, 1))
    with pytest.raises(NotATorusPoint):
        membership(l, 1, (0, 1))
    with pytest.raises(NotATorusPoint):
        membership(l, 9, (0, 1))


def test_unit_ideal_iff_empty():
    l = jump_loci(twist(koszul_torus(2), (2, 1)))
    for rec in l.records.values():
        assert rec.ideal.is_unit() == rec.empty
    hs = jump_loci(CORPUS["hand_square"])
    for rec in hs.records.values():
        assert rec.ideal.is_unit() == rec.empty


def test_report_fragment():
    d = jump_loci(wedge(2)).to_dict()
    assert d["degrees"]["1"]["whole_torus"] is True
    assert d["degrees"]["1"]["generators"] == []
    assert d["degrees"]["0"]["ranks"] == {"prev": 0, "next": 1, "module": 1}
    assert d["euler_characteristic"] == -1


# -- properties

def test_rank_bookkeeping_over_corpus():
    for name, c in CORPUS.items():
        l = jump_loci(c)
        for i, rec in l.records.items():
            assert rec.rank_prev + rec.rank_next <= rec.rank_module, (name, i)
            if rec.generically_nonvanishing:
                assert rec.whole_torus, (name, i)


def small_entry(R):
    mono = st.tuples(*[st.integers(0, 1)] * R.num_vars)
    return st.dictionaries(mono, st.integers(-2, 2), max_size=2).map(lambda d: Polynomial(R, d))


R2 = LaurentRing(2, QQ)


@st.composite
def small_complexes(draw):
    """One-step complexes R^a -> R^b with a random differential."""
    a, b = draw(st.integers(1, 2)), draw(st.integers(1, 3))
    d0 = PolyMatrix(R2, b, a, [[draw(small_entry(R2)) for _ in range(a)] for _ in range(b)])
    return FreeComplex(R2, 0, 1, {0: a, 1: b}, {0: d0})


@settings(max_examples=25, deadline=None)
@given(c=small_complexes())
def test_jumping_ideal_matches_exhaustive_minors(c):
    for i in c.degrees:
        D = block_diagonal(c.d(i - 1), c.d(i))
        n = c.rank(i)
        exhaustive = determinantal_ideal(D, n)
        expected = exhaustive if exhaustive.is_zero() else exhaustive.saturate_torus()
        got = jumping_ideal(c, i)
        assert same_variety(got, expected)


def _twist_cases():
    out = []
    for name, c in CORPUS.items():
        key = "QQ" if c.coeff.kind == "QQ" else f"F{c.coeff.p}"
        for lam in TWISTS.get(key, []):
            if len(lam) == c.num_vars:
                out.append((name, lam))
            elif c.num_vars == 1:
                out.append((name, lam[:1]))
    return out


def _points(c):
    N = c.num_vars
    if c.coeff.kind == "Fp":
        vals = range(1, c.coeff.p)
    else:
        vals = [1, 2, 3, -1, Fraction(1, 2)]
    return list(itertools.islice(itertools.product(vals, repeat=N), 40))


@pytest.mark.parametrize("name,lam", _twist_cases(), ids=[f"{n}-{l}" for n, l in _twist_cases()])
def test_twist_equivariance(name, lam):
    c = CORPUS[name]
    l, lt = jump_loci(c), jump_loci(twist(c, lam))
    for x in _points(c):
        scaled = tuple(a * b for a, b in zip(lam, x))
        for i in c.degrees:
            assert membership(lt, i, x) == membership(l, i, scaled), (i, x)


@pytest.mark.parametrize("name", ["torus2_QQ", "wedge2", "surface2", "hand_square", "twist_2_1_QQ"])
@pytest.mark.parametrize("k", [1, -2])
def test_shift_covariance(name, k):
    c = CORPUS[name]
    l, ls = jump_loci(c), jump_loci(shift(c, k))
    for i in c.degrees:
        assert same_variety(ls.ideal(i - k), l.ideal(i))


@pytest.mark.parametrize("name", list(CORPUS), ids=list(CORPUS))
def test_membership_agrees_with_fibers(name):
    c = CORPUS[name]
    l = jump_loci(c)
    for x in _points(c)[:15]:
        b = fiber_betti(c, x).betti
        for i in c.degrees:
            assert membership(l, i, x) == (b[i] != 0), (i, x)
