"""Harmonic numbers, hyperharmonic polynomials, and harmonic polynomials.

The hyperharmonic polynomial of index n has degree n-1 in the order
variable (the zero polynomial for n = 0); evaluating it at a
non-negative integer r gives the n-th hyperharmonic number of order r,
at 1 the ordinary harmonic number, at 0 the value 1/n.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .poly import Poly, binom_poly
from .series import gf_harmonic_poly

__all__ = ["harmonic_number", "hyperharmonic_poly", "harmonic_poly"]


@lru_cache(maxsize=None)
def harmonic_number(n: int) -> Fraction:
    if n < 0:
        raise ValueError("index must be >= 0")
    if n == 0:
        return Fraction(0)
    return harmonic_number(n - 1) + Fraction(1, n)


@lru_cache(maxsize=None)
def hyperharmonic_poly(n: int) -> Poly:
    """Sum of binom(x + n - t - 1, n - t)/t over t = 1..n; zero for n = 0."""
    if n < 0:
        raise ValueError("index must be >= 0")
    total = Poly()
    for t in range(1, n + 1):
        total = total + binom_poly(n - t - 1, 1, n - t) * Fraction(1, t)
    return total


@lru_cache(maxsize=None)
def harmonic_poly(m: int) -> Poly:
    """Degree-m harmonic polynomial; its value at 0 is the (m+1)-st harmonic number."""
    if m < 0:
        raise ValueError("index must be >= 0")
    coeff = gf_harmonic_poly(m)[m]
    return coeff if isinstance(coeff, Poly) else Poly.const(coeff)
