from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cobwebs.polynomial import Polynomial

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.lists(rationals, max_size=6).map(Polynomial)


def test_trims_and_degree():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([0, 0]).degree == -1
    assert Polynomial.monomial(3).degree == 3


def test_from_roots():
    assert Polynomial.from_roots([1, 2]) == Polynomial([2, -3, 1])
    assert Polynomial.from_roots([]) == Polynomial([1])
    assert Polynomial.from_roots([0, 0, 0]) == Polynomial.monomial(3)


def test_evaluation_exact():
    p = Polynomial([Fraction(1, 3), 0, 2])
    assert p(Fraction(1, 2)) == Fraction(1, 3) + Fraction(1, 2)
    assert p(3) == Fraction(55, 3)


def test_rejects_floats():
    with pytest.raises(TypeError):
        Polynomial([0.5])


def test_str():
    assert str(Polynomial([2, -3, 1])) == "x^2 - 3*x + 2"
    assert str(Polynomial([])) == "0"
    assert str(Polynomial([0, -1])) == "-x"


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a - a == Polynomial()


@given(polys, polys, rationals)
def test_evaluation_is_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)
