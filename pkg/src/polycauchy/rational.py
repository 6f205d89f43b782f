"""Exact rational scalars and scalar combinatorial helpers.

The universal scalar of this package is :class:`fractions.Fraction`:
arbitrary precision, always reduced, denominator always positive, so
equality is structural equality of canonical forms.  Plain ``int`` values
interoperate freely and compare equal to the corresponding Fraction.

Text form is ``"p/q"`` with the ``/q`` omitted when the denominator is 1,
which is exactly what ``str(Fraction)`` produces; :func:`parse_rational`
accepts the same form back, so values round-trip exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

Rational = Fraction

__all__ = ["Rational", "rat", "parse_rational", "format_rational", "binom_scalar"]


def rat(numerator: int, denominator: int = 1) -> Fraction:
    """Canonical fraction numerator/denominator, sign carried by the numerator."""
    return Fraction(numerator, denominator)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or a bare integer "p") into an exact rational."""
    return Fraction(text.strip())


def format_rational(value) -> str:
    """Render an exact value as "p/q", omitting the denominator when it is 1."""
    return str(Fraction(value))


def binom_scalar(top, n: int) -> Fraction:
    """Generalized binomial coefficient: top*(top-1)*...*(top-n+1) / n!.

    ``top`` may be any exact rational (or integer); ``n`` must be a
    non-negative integer.  Returns 1 for n == 0.
    """
    if n < 0:
        raise ValueError("lower index of a binomial coefficient must be >= 0")
    product = Fraction(1)
    for j in range(n):
        product *= top - j
    return product / factorial(n)
