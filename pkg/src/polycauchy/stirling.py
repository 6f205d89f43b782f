"""Stirling-like triangles and their polynomial generalizations.

Integer triangles (all memoized row by row, filled on demand under a lock
so concurrent readers are safe):

* ``stirling1`` -- unsigned first kind, [n+1,m] = [n,m-1] + n*[n,m];
* ``stirling2`` -- second kind, {n+1,m} = {n,m-1} + m*{n,m};
* ``central_u`` -- signed central factorial numbers with even indices,
  u(n+1,m) = u(n,m-1) - n^2*u(n,m) with u(0,0) = 1.  The recurrence also
  fixes u(n,0) = 0 for n >= 1;
* ``lah`` -- L(n,m) = (n!/m!) * binom(n-1, m-1).

Shifted-parameter polynomials (``gsn1``/``gsn2``) interpolate the
ordinary triangles: at x = 0 they reduce to the triangle entry and at a
non-negative integer r they give the r-shifted variants.  The bivariate
first kind carries an extra geometric step q; the bivariate second kind
is stored with the q^m denominator cleared (callers divide by q^m).
"""

from __future__ import annotations

import os
import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .poly import Poly, binom_poly

__all__ = [
    "stirling1",
    "stirling2",
    "central_u",
    "lah",
    "gsn1",
    "gsn2",
    "gsn1_at",
    "gsn2_at",
    "gsn1_bivariate",
    "gsn2_bivariate_numerator",
    "gsn1_bivariate_at",
    "gsn2_bivariate_at",
    "whitney",
    "a_number",
    "triangle_rows",
    "save_triangle_caches",
    "load_triangle_caches",
    "CACHE_DIR_ENV",
]

CACHE_DIR_ENV = "POLYCAUCHY_CACHE_DIR"
_CACHE_FORMAT_HEADER = "# polycauchy triangle cache v1"


class _Triangle:
    """Row-memoized integer triangle; rows are extended on demand."""

    def __init__(self, name: str, step):
        self.name = name
        self._step = step  # step(previous_row, n_previous) -> next row
        self._rows = [[1]]
        self._lock = threading.Lock()

    def value(self, n: int, m: int) -> int:
        if n < 0:
            raise ValueError(f"{self.name}: row index must be >= 0")
        if m < 0 or m > n:
            return 0
        if n >= len(self._rows):
            with self._lock:
                while n >= len(self._rows):
                    prev = self._rows[-1]
                    self._rows.append(self._step(prev, len(self._rows) - 1))
        return self._rows[n][m]

    def rows(self, max_n: int) -> list[list[int]]:
        self.value(max_n, 0)
        return [list(r) for r in self._rows[: max_n + 1]]

    def merge(self, rows: list[list[int]]):
        with self._lock:
            if len(rows) > len(self._rows):
                self._rows = [list(r) for r in rows]


def _step_s1(prev: list[int], n: int) -> list[int]:
    return [
        (prev[m - 1] if m >= 1 else 0) + n * (prev[m] if m <= n else 0)
        for m in range(n + 2)
    ]


def _step_s2(prev: list[int], n: int) -> list[int]:
    return [
        (prev[m - 1] if m >= 1 else 0) + m * (prev[m] if m <= n else 0)
        for m in range(n + 2)
    ]


def _step_u(prev: list[int], n: int) -> list[int]:
    return [
        (prev[m - 1] if m >= 1 else 0) - n * n * (prev[m] if m <= n else 0)
        for m in range(n + 2)
    ]


_TRIANGLES = {
    "stirling1": _Triangle("stirling1", _step_s1),
    "stirling2": _Triangle("stirling2", _step_s2),
    "central": _Triangle("central", _step_u),
}


def stirling1(n: int, m: int) -> int:
    """Unsigned Stirling number of the first kind."""
    return _TRIANGLES["stirling1"].value(n, m)


def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind."""
    return _TRIANGLES["stirling2"].value(n, m)


def central_u(n: int, m: int) -> int:
    """Signed central factorial number with even indices, u(n, m)."""
    return _TRIANGLES["central"].value(n, m)


def lah(n: int, m: int) -> int:
    """Unsigned Lah number L(n, m) = (n!/m!) binom(n-1, m-1)."""
    if n < 0 or m < 0:
        raise ValueError("Lah indices must be >= 0")
    if m > n:
        return 0
    if n == 0:
        return 1
    if m == 0:
        return 0
    return factorial(n) // factorial(m) * comb(n - 1, m - 1)


def triangle_rows(kind: str, max_n: int) -> list[tuple[int, int, int]]:
    """Flat (n, m, value) listing of a triangle, for tables and caches."""
    out = []
    for n in range(max_n + 1):
        for m in range(n + 1):
            if kind == "lah":
                out.append((n, m, lah(n, m)))
            else:
                out.append((n, m, _TRIANGLES[kind].value(n, m)))
    return out


def _check_indices(n: int, m: int):
    if n < 0 or m < 0 or m > n:
        raise ValueError(f"indices out of range: need 0 <= m <= n, got n={n}, m={m}")


@lru_cache(maxsize=None)
def gsn1(n: int, m: int) -> Poly:
    """Shifted-parameter Stirling polynomial of the first kind, [n m]_x."""
    _check_indices(n, m)
    return Poly([comb(i + m, m) * stirling1(n, i + m) for i in range(n - m + 1)])


@lru_cache(maxsize=None)
def gsn2(n: int, m: int) -> Poly:
    """Shifted-parameter Stirling polynomial of the second kind, {n m}_x."""
    _check_indices(n, m)
    return Poly([comb(n, i) * stirling2(n - i, m) for i in range(n - m + 1)])


def gsn1_at(n: int, m: int, x0) -> Fraction:
    return Fraction(gsn1(n, m)(Fraction(x0)))


def gsn2_at(n: int, m: int, x0) -> Fraction:
    return Fraction(gsn2(n, m)(Fraction(x0)))


@lru_cache(maxsize=None)
def gsn1_bivariate(n: int, m: int) -> Poly:
    """First-kind bivariate polynomial: outer variable y, inner variable q."""
    _check_indices(n, m)
    coeffs = []
    for i in range(n - m + 1):
        inner = [0] * (n - m - i) + [comb(i + m, m) * stirling1(n, i + m)]
        coeffs.append(Poly(inner))
    return Poly(coeffs)


@lru_cache(maxsize=None)
def gsn2_bivariate_numerator(n: int, m: int) -> Poly:
    """q^m-cleared second-kind bivariate polynomial (outer y, inner q).

    The actual bivariate value carries a 1/q^m factor; dividing the
    returned polynomial (evaluated at y, q) by q^m recovers it.
    """
    _check_indices(n, m)
    outer = [Poly() for _ in range(n + 1)]
    for l in range(m + 1):
        weight = Fraction((-1) ** (m - l) * comb(m, l), factorial(m))
        # (y + l q)^n contributes comb(n, j) l^(n-j) q^(n-j) to y^j
        for j in range(n + 1):
            c = weight * comb(n, j) * l ** (n - j)
            if c:
                outer[j] = outer[j] + Poly([0] * (n - j) + [c])
    return Poly(outer)


def gsn1_bivariate_at(n: int, m: int, y, q) -> Fraction:
    _check_indices(n, m)
    total = Fraction(0)
    y = Fraction(y)
    q = Fraction(q)
    for i in range(n - m + 1):
        total += comb(i + m, m) * stirling1(n, i + m) * y**i * q ** (n - m - i)
    return total


def gsn2_bivariate_at(n: int, m: int, y, q) -> Fraction:
    _check_indices(n, m)
    q = Fraction(q)
    if not q:
        raise ValueError("the bivariate second-kind value needs q != 0")
    y = Fraction(y)
    total = Fraction(0)
    for l in range(m + 1):
        total += Fraction((-1) ** (m - l) * comb(m, l)) * (y + l * q) ** n
    return total / (factorial(m) * q**m)


def whitney(kind: str, m: int, r: int, n: int, l: int) -> Fraction:
    """r-Whitney number of either kind via the shifted Stirling polynomials.

    kind "first":  w_{m,r}(n,l) = m^(n-l) [n l]_{r/m}
    kind "second": W_{m,r}(n,l) = m^(n-l) {n l}_{r/m}
    """
    if m == 0:
        raise ValueError("r-Whitney numbers need m != 0")
    if kind not in ("first", "second"):
        raise ValueError(f"unknown kind {kind!r}")
    _check_indices(n, l)
    x0 = Fraction(r, m)
    poly = gsn1(n, l) if kind == "first" else gsn2(n, l)
    return Fraction(m) ** (n - l) * poly(x0)


@lru_cache(maxsize=None)
def a_number(n: int, m: int) -> Poly:
    """(n!/m!) * binom(x + n - 1, n - m) as a polynomial in x."""
    _check_indices(n, m)
    return binom_poly(n - 1, 1, n - m) * (factorial(n) // factorial(m))


def save_triangle_caches(dirpath: str | None = None) -> str | None:
    """Persist the integer triangles as TSV files; returns the directory used."""
    dirpath = dirpath or os.environ.get(CACHE_DIR_ENV)
    if not dirpath:
        return None
    os.makedirs(dirpath, exist_ok=True)
    for name, tri in _TRIANGLES.items():
        with tri._lock:
            rows = [list(r) for r in tri._rows]
        path = os.path.join(dirpath, f"{name}.tsv")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(_CACHE_FORMAT_HEADER + "\n")
            for n, row in enumerate(rows):
                for m, v in enumerate(row):
                    fh.write(f"{n}\t{m}\t{v}\n")
    return dirpath


def load_triangle_caches(dirpath: str | None = None) -> bool:
    """Load previously saved triangles; silently ignores missing files."""
    dirpath = dirpath or os.environ.get(CACHE_DIR_ENV)
    if not dirpath or not os.path.isdir(dirpath):
        return False
    loaded = False
    for name, tri in _TRIANGLES.items():
        path = os.path.join(dirpath, f"{name}.tsv")
        if not os.path.isfile(path):
            continue
        rows: list[list[int]] = []
        with open(path, encoding="utf-8") as fh:
            header = fh.readline().rstrip("\n")
            if header != _CACHE_FORMAT_HEADER:
                continue
            ok = True
            for line in fh:
                parts = line.rstrip("\n").split("\t")
                if len(parts) != 3:
                    ok = False
                    break
                n, m, v = int(parts[0]), int(parts[1]), int(parts[2])
                while len(rows) <= n:
                    rows.append([])
                if m != len(rows[n]):
                    ok = False
                    break
                rows[n].append(v)
            if not ok:
                continue
        if rows and all(len(row) == n + 1 for n, row in enumerate(rows)):
            tri.merge(rows)
            loaded = True
    return loaded
