import json
import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from torusjump import (ComplexConditionViolated, FreeComplex, Fp, GroupPresentation, LaurentRing,
                       PolyMatrix, QQ, SchemaError, ShapeMismatch, UnsupportedPresentation, ZZ,
                       fiber_betti, fox_complex, jump_loci, koszul_torus, load, loads,
                       point_complex, same_variety, shift, surface, tensor_product, twist, wedge)
from torusjump.chaincx import dumps

from corpus import build_corpus

CORPUS = build_corpus()

FIX = Path(__file__).parent / "fixtures"


# -- generators

def test_koszul_examples():
    c1 = koszul_torus(1)
    assert [c1.rank(i) for i in c1.degrees] == [1, 1]
    assert c1.d(0) == PolyMatrix.from_rows(c1.ring, [["t1 - 1"]])
    c2 = koszul_torus(2)
    assert [c2.rank(i) for i in c2.degrees] == [1, 2, 1]
    assert c2.d(0) == PolyMatrix.from_rows(c2.ring, [["t1 - 1"], ["t2 - 1"]])
    assert c2.d(1) == PolyMatrix.from_rows(c2.ring, [["-(t2 - 1)", "t1 - 1"]])
    c3 = koszul_torus(3)
    assert [c3.rank(i) for i in c3.degrees] == [1, 3, 3, 1]
    assert all((c3.d(i + 1) @ c3.d(i)).is_zero() for i in range(2))


def test_validate_examples():
    c = koszul_torus(2)
    flipped = PolyMatrix.from_rows(c.ring, [["t2 - 1", "t1 - 1"]])
    with pytest.raises(ComplexConditionViolated) as e:
        FreeComplex(c.ring, 0, 2, c.ranks, {0: c.d(0), 1: flipped})
    assert e.value.degree == 0
    zero = FreeComplex(LaurentRing(2, QQ), 0, 2, {0: 1, 1: 3, 2: 2})
    assert zero.d(1).shape == (2, 3) and zero.d(1).is_zero()


def test_validate_shape_errors():
    R = LaurentRing(1, QQ)
    with pytest.raises(ShapeMismatch):
        FreeComplex(R, 0, 1, {0: 1, 1: 2}, {0: PolyMatrix.from_rows(R, [["t1"]])})
    with pytest.raises(ValueError):
        FreeComplex(R, 1, 0, {})


def test_twist_examples():
    c = koszul_torus(2)
    assert twist(c, (1, 1)) == c
    t = twist(koszul_torus(1), (2,))
    assert t.d(0) == PolyMatrix.from_rows(t.ring, [["2*t1 - 1"]])
    lam = (Fraction(1, 2), 3)
    assert twist(twist(c, lam), (2, Fraction(1, 3))) == c


def test_tensor_examples():
    c = koszul_torus(2)
    unit = point_complex(c.ring)
    assert tensor_product(c, unit) == c
    assert tensor_product(unit, c) == c
    t11 = tensor_product(koszul_torus(1), koszul_torus(1), mode="concat")
    assert [t11.rank(i) for i in t11.degrees] == [1, 2, 1]
    assert t11 == koszul_torus(2)
    assert tensor_product(koszul_torus(2), koszul_torus(1), mode="concat") == koszul_torus(3)


def test_tensor_rejects_mixed_rings():
    with pytest.raises(Exception, match="same-ring"):
        tensor_product(koszul_torus(1), koszul_torus(2))
    with pytest.raises(ValueError):
        tensor_product(koszul_torus(1), koszul_torus(1), mode="outer")


def test_fox_examples():
    w = wedge(2)
    assert [w.rank(i) for i in w.degrees] == [1, 2]
    assert w.d(0) == PolyMatrix.from_rows(w.ring, [["t1 - 1"], ["t2 - 1"]])
    s = surface(2)
    assert [s.rank(i) for i in s.degrees] == [1, 4, 1]
    assert s.euler_characteristic() == -2
    z2 = fox_complex(GroupPresentation.from_strings("ab", ["abAB"]))
    assert z2.d(1) == PolyMatrix.from_rows(z2.ring, [["1 - t2", "t1 - 1"]])


def test_fox_presentation_parsing():
    p = GroupPresentation.from_json(json.loads((FIX / "z2_presentation.json").read_text()))
    assert p.relators == ((1, 2, -1, -2),)
    assert GroupPresentation.from_strings("ab", ["aA", "abAB"]).relators == ((1, 2, -1, -2),)
    assert GroupPresentation.from_json({"num_generators": 2, "relators": [[1, 2, -1, -2]]}).relators == p.relators


def test_fox_rejects_non_free_abelianization():
    with pytest.raises(UnsupportedPresentation):
        fox_complex(GroupPresentation.from_strings("a", ["aa"]))
    with pytest.raises(UnsupportedPresentation):
        fox_complex(GroupPresentation.from_strings("ab", ["ab"]))


def test_fox_of_free_abelian_matches_torus():
    z2 = fox_complex(GroupPresentation.from_strings("ab", ["abAB"]))
    l1, l2 = jump_loci(z2), jump_loci(koszul_torus(2))
    for i in range(3):
        assert same_variety(l1.ideal(i), l2.ideal(i))


def test_shift_relabels_degrees():
    c = koszul_torus(2)
    s = shift(c, 1)
    assert (s.lo, s.hi) == (-1, 1)
    assert s.rank(-1) == 1 and s.d(-1) == -c.d(0)
    assert shift(s, -1) == c


# -- JSON

def test_golden_round_trip():
    golden = (FIX / "torus2_zz.golden.json").read_text()
    assert dumps(koszul_torus(2, ZZ)) == golden
    assert dumps(loads(golden)) == golden


@pytest.mark.parametrize("name,c", list(CORPUS.items()), ids=list(CORPUS))
def test_corpus_round_trip(name, c):
    text = dumps(c)
    assert loads(text) == c
    assert dumps(loads(text)) == text


def test_bad_ranks_fixture():
    with pytest.raises(ShapeMismatch) as e:
        load(FIX / "bad_ranks.json")
    assert e.value.degree == 0 and "degree 0" in str(e.value)


def test_bad_condition_fixture():
    with pytest.raises(ComplexConditionViolated) as e:
        load(FIX / "bad_condition.json")
    assert e.value.degree == 0


def test_negative_exponent_fixture():
    with pytest.raises(SchemaError, match="/differentials/0/0/0"):
        load(FIX / "negative_exponent.json")


@pytest.mark.parametrize("text,pointer", [
    ("[]", ""),
    ('{"ring": 3}', "/ring"),
    ('{"ring": {"num_vars": 1, "coeff": "RR"}, "lo": 0, "hi": 0, "ranks": {"0": 1}}', "/ring/coeff"),
    ('{"ring": {"num_vars": 1, "coeff": "QQ"}, "lo": 0, "ranks": {}}', "/hi"),
    ('{"ring": {"num_vars": 1, "coeff": "QQ"}, "lo": 0, "hi": 0, "ranks": {"0": -1}}', "/ranks/0"),
    ('{"ring": {"num_vars": 1, "coeff": {"Fp": 4}}, "lo": 0, "hi": 0, "ranks": {}}', "/ring/coeff"),
    ("{not json", ""),
])
def test_schema_errors(text, pointer):
    with pytest.raises(SchemaError) as e:
        loads(text)
    assert e.value.pointer == pointer


def test_fp_coefficients_round_trip():
    c = koszul_torus(2, Fp(5))
    assert json.loads(dumps(c))["ring"]["coeff"] == {"Fp": 5}
    assert loads(dumps(c)) == c


# -- properties

TWISTABLE = [(n, c) for n, c in CORPUS.items() if c.coeff.kind == "QQ"]


@pytest.mark.parametrize("name,c", TWISTABLE, ids=[n for n, _ in TWISTABLE])
def test_every_generator_output_validates(name, c):
    c.validate()
    assert c.euler_characteristic() == sum((-1) ** i * c.rank(i) for i in c.degrees)


nonzero_rational = st.sampled_from([2, 3, -1, Fraction(1, 2), Fraction(-2, 3), 5])


@pytest.mark.parametrize("name,c", TWISTABLE, ids=[n for n, _ in TWISTABLE])
@settings(max_examples=8, deadline=None)
@given(data=st.data())
def test_twist_fibers_match_scaled_points(name, c, data):
    N = c.num_vars
    lam = data.draw(st.tuples(*[nonzero_rational] * N))
    x = data.draw(st.tuples(*[nonzero_rational] * N))
    t = twist(c, lam)
    assert t.euler_characteristic() == c.euler_characteristic()
    scaled = tuple(a * b for a, b in zip(lam, x))
    assert fiber_betti(t, x).betti == fiber_betti(c, scaled).betti


PAIRS = [(koszul_torus(1), koszul_torus(1)), (wedge(1), wedge(2)), (surface(1), wedge(1)),
         (koszul_torus(2), wedge(1)), (wedge(2), koszul_torus(1))]


@pytest.mark.parametrize("a,b", PAIRS, ids=[f"pair{k}" for k in range(len(PAIRS))])
def test_tensor_euler_is_multiplicative(a, b):
    t = tensor_product(a, b, mode="concat")
    assert t.euler_characteristic() == a.euler_characteristic() * b.euler_characteristic()
    t.validate()


def test_same_ring_tensor_is_a_complex():
    c = twist(koszul_torus(2), (2, 1))
    t = tensor_product(c, koszul_torus(2))
    t.validate()
    assert t.euler_characteristic() == 0
    # Kunneth on the fiber at a point where both factors are acyclic
    rng = random.Random(3)
    for _ in range(3):
        x = (rng.choice([3, 5, 7]), rng.choice([-1, 2, 11]))
        assert all(v == 0 for v in fiber_betti(t, x).betti.values())
