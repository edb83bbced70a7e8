import random

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from torusjump.errors import UnsupportedExtension
from torusjump.galois import GaloisField, is_prime, modulus, prime_factors

FIELDS = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (5, 3), (7, 4), (13, 2)]


@pytest.mark.parametrize("p,r", FIELDS)
def test_modulus_is_irreducible_per_sympy(p, r):
    m = modulus(p, r)
    assert len(m) == r + 1 and m[-1] == 1
    x = sp.Symbol("x")
    poly = sp.Poly(sum(c * x ** k for k, c in enumerate(m)), x, modulus=p)
    assert poly.is_irreducible


@pytest.mark.parametrize("p,r", FIELDS)
def test_multiplicative_group_order(p, r):
    F = GaloisField(p, r)
    rng = random.Random(p * 10 + r)
    for _ in range(10):
        x = F.random_nonzero(rng)
        assert x ** (F.order - 1) == F.one()
        assert x * x.inverse() == F.one()


def test_small_field_is_a_field():
    F = GaloisField(2, 3)
    elems = list(F.elements())
    assert len(elems) == 8 and len(set(elems)) == 8
    for a in elems:
        for b in elems:
            assert a * b == b * a
            if b:
                assert (a / b) * b == a


def test_unsupported_extension_degree():
    with pytest.raises(UnsupportedExtension):
        GaloisField(3, 5)


def test_parse_and_print():
    F = GaloisField(5, 2)
    x = F.parse("3 + 2*a")
    assert x == F((3, 2))
    assert F.parse(str(x)) == x


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 4), st.data())
def test_distributivity_in_extensions(r, data):
    F = GaloisField(3, r)
    el = st.tuples(*[st.integers(0, 2)] * r).map(F)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a


@pytest.mark.parametrize("n", [2, 3, 97, 2 ** 31 - 1, 1000003])
def test_is_prime_true(n):
    assert is_prime(n) and sp.isprime(n)


@pytest.mark.parametrize("n", [0, 1, 4, 561, 2 ** 31 + 1, 1000001])
def test_is_prime_false(n):
    assert not is_prime(n) and not sp.isprime(n)


def test_prime_factors():
    assert prime_factors(360) == [2, 3, 5]
    assert prime_factors(-49) == [7]
    assert prime_factors(1) == []
