from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polycauchy import binom_scalar, format_rational, parse_rational, rat

fractions = st.fractions(min_value=-1000, max_value=1000, max_denominator=10**4)


def test_canonicalization():
    assert rat(2, 4) == Fraction(1, 2)
    assert rat(-19, 30) == Fraction(-19, 30)
    assert rat(3, -6) == Fraction(-1, 2)
    assert rat(3, -6).denominator == 2
    assert rat(0, 7) == 0


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        rat(1, 0)


def test_integers_are_unit_denominator():
    assert rat(5).denominator == 1
    assert rat(5) == 5


@given(st.integers(-500, 500), st.integers(1, 200))
def test_additive_inverse(a, b):
    assert rat(a, b) + rat(-a, b) == 0


@given(fractions, fractions, fractions)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if c != 0:
        assert (a / c) * c == a


def test_binom_scalar_examples():
    assert binom_scalar(5, 2) == 10
    assert binom_scalar(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binom_scalar(-1, 3) == -1
    assert binom_scalar(Fraction(7, 3), 0) == 1


def test_binom_scalar_rejects_negative_order():
    with pytest.raises(ValueError):
        binom_scalar(Fraction(1, 2), -1)


@given(fractions, st.integers(0, 8))
def test_binom_times_factorial_is_falling_product(r, n):
    product = Fraction(1)
    for j in range(n):
        product *= r - j
    fact = 1
    for j in range(1, n + 1):
        fact *= j
    assert binom_scalar(r, n) * fact == product


@given(fractions, st.integers(1, 8))
def test_pascal_rule(r, n):
    assert binom_scalar(r, n) == binom_scalar(r - 1, n) + binom_scalar(r - 1, n - 1)


@given(fractions)
def test_text_round_trip(x):
    assert parse_rational(format_rational(x)) == x


def test_text_form():
    assert format_rational(Fraction(1, 2)) == "1/2"
    assert format_rational(Fraction(-19, 30)) == "-19/30"
    assert format_rational(Fraction(7, 1)) == "7"
    assert parse_rational("-3/6") == Fraction(-1, 2)
