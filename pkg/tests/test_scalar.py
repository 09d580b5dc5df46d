import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sculptgraph.scalar import HALF, I, INV_SQRT2, ONE, SQRT2, ZERO, ExactScalar

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
scalars = st.builds(ExactScalar, small_rationals, small_rationals, small_rationals, small_rationals)


def test_components_are_canonical():
    x = ExactScalar("2/4", Fraction(-3, -6), 0, Fraction(6, -4))
    assert x.components == (Fraction(1, 2), Fraction(1, 2), 0, Fraction(-3, 2))
    for c in x.components:
        assert c.denominator > 0


def test_sqrt2_squares_to_two():
    assert SQRT2 * SQRT2 == ExactScalar(2)
    assert INV_SQRT2 * INV_SQRT2 == HALF
    assert INV_SQRT2 * SQRT2 == ONE


def test_i_squares_to_minus_one():
    assert I * I == -ONE


def test_inverse_examples():
    x = ExactScalar(1, 1)  # 1 + sqrt2
    assert x.inverse() == ExactScalar(-1, 1)
    assert (ExactScalar(0, 0, 2) / ExactScalar(0, 0, 0, 1)) == SQRT2


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ONE / 0


def test_mixed_with_python_numbers():
    assert ONE + 1 == ExactScalar(2)
    assert 3 * INV_SQRT2 == ExactScalar(0, Fraction(3, 2))
    assert 1 - SQRT2 == ExactScalar(1, -1)
    assert ExactScalar(3) == 3
    assert ExactScalar(Fraction(1, 2)) == Fraction(1, 2)
    assert hash(ExactScalar(3)) == hash(ExactScalar(3, 0, 0, 0))


def test_integer_detection():
    assert ExactScalar(-4).is_integer()
    assert int(ExactScalar(-4)) == -4
    assert not HALF.is_integer()
    assert not SQRT2.is_integer()
    with pytest.raises(ValueError):
        int(SQRT2)


def test_str():
    assert str(ZERO) == "0"
    assert str(INV_SQRT2) == "1/2√2"
    assert str(ExactScalar(1, -1)) == "1-√2"
    assert str(I) == "1i"


@given(scalars, scalars, scalars)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO


@settings(max_examples=200)
@given(scalars)
def test_inverse_is_exact(a):
    if a.is_zero():
        return
    assert a * a.inverse() == ONE
    assert a / a == ONE


@given(scalars, scalars)
def test_matches_floating_point(a, b):
    assert cmath.isclose((a * b).to_complex(), a.to_complex() * b.to_complex(), abs_tol=1e-9)
    assert abs(a.abs2().to_complex() - abs(a.to_complex()) ** 2) < 1e-9


@given(scalars)
def test_conjugate(a):
    assert (a * a.conjugate()).is_real()
    assert a * a.conjugate() == a.abs2()
