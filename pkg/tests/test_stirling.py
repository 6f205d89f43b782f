import random
from fractions import Fraction as F
from math import comb, factorial

import pytest

from polycauchy import (
    Poly,
    a_number,
    binom_poly,
    central_u,
    gsn1,
    gsn1_at,
    gsn1_bivariate,
    gsn1_bivariate_at,
    gsn2,
    gsn2_at,
    gsn2_bivariate_at,
    gsn2_bivariate_numerator,
    lah,
    stirling1,
    stirling2,
    whitney,
)
from polycauchy.stirling import load_triangle_caches, save_triangle_caches, triangle_rows


def test_triangle_values():
    assert stirling1(0, 0) == 1
    assert stirling1(3, 2) == 3
    assert stirling1(4, 2) == 11
    assert stirling1(4, 0) == 0
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    assert stirling2(5, 5) == 1
    assert stirling1(5, 7) == 0


def test_lah_values():
    assert lah(0, 0) == 1
    assert lah(3, 1) == 6
    assert lah(3, 2) == 6
    assert lah(4, 2) == 36
    assert lah(4, 0) == 0
    with pytest.raises(ValueError):
        lah(-1, 0)


def test_central_values():
    assert central_u(1, 1) == 1
    assert central_u(2, 1) == -1
    assert central_u(2, 2) == 1
    assert central_u(3, 2) == -5
    assert central_u(3, 2) == central_u(2, 1) - 4 * central_u(2, 2)
    assert all(central_u(n, 0) == 0 for n in range(1, 8))
    with pytest.raises(ValueError):
        central_u(-1, 0)


def test_gsn_examples():
    assert gsn1(2, 1) == Poly([1, 2])
    assert gsn2(3, 2) == Poly([3, 3])
    for n in range(7):
        for m in range(n + 1):
            assert gsn1_at(n, m, 0) == stirling1(n, m)
            assert gsn2_at(n, m, 0) == stirling2(n, m)
    assert gsn1_at(2, 1, -1) == -1
    assert gsn1_at(2, 1, 1) == 3 == stirling1(3, 2)


def test_gsn_domain_errors():
    with pytest.raises(ValueError):
        gsn1(2, 3)
    with pytest.raises(ValueError):
        gsn2(-1, 0)


def test_gsn_shift_matches_r_stirling():
    # at a non-negative integer r the shifted polynomials give the
    # (n+r, m+r) entries of the plain triangles
    for r in range(4):
        for n in range(6):
            for m in range(n + 1):
                assert gsn1_at(n, m, r) == _r_stirling1(n + r, m + r, r)


def _r_stirling1(n, m, r):
    # direct double-sum via the defining expansion of gsn1
    return sum(
        comb(i + (m - r), m - r) * stirling1(n - r, i + m - r) * r**i
        for i in range(n - m + 1)
    )


def test_first_kind_derivative_representation():
    # gsn1(n, m) equals (n!/m!) * m-th derivative of binom(x+n-1, n)
    for n in range(11):
        base = binom_poly(n - 1, 1, n)
        for m in range(n + 1):
            want = base.derivative(m) * F(factorial(n), factorial(m))
            assert gsn1(n, m) == want


def test_second_kind_alternating_power_sum():
    for n in range(9):
        for m in range(n + 1):
            total = Poly()
            for l in range(m + 1):
                total = total + (Poly([l, 1]) ** n) * F((-1) ** (m - l) * comb(m, l), factorial(m))
            assert gsn2(n, m) == total


def test_orthogonality_polynomial_identities():
    for n in range(11):
        for m in range(n + 1):
            s_a = Poly()
            s_b = Poly()
            for l in range(m, n + 1):
                s_a = s_a + gsn1(n, l) * gsn2(l, m) * (-1) ** (n - l)
                s_b = s_b + gsn2(n, l) * gsn1(l, m) * (-1) ** (n - l)
            want = Poly([1 if n == m else 0])
            assert s_a == want
            assert s_b == want


def test_inversion_round_trip_random_sequences():
    rng = random.Random(7)
    for _ in range(25):
        length = rng.randint(1, 8)
        g = [F(rng.randint(-99, 99), rng.randint(1, 20)) for _ in range(length)]
        x = F(rng.randint(-9, 9), rng.randint(1, 6))
        f = [
            sum(((-1) ** (n - m)) * gsn1(n, m)(x) * g[m] for m in range(n + 1))
            for n in range(length)
        ]
        back = [sum(gsn2(n, m)(x) * f[m] for m in range(n + 1)) for n in range(length)]
        assert back == g


def test_symmetric_transformation_formulas():
    # two alternative expansions of the shifted first-kind polynomials;
    # the second needs the weight n!/m! (a plain binomial there fails the
    # x^(n-m) degree count and breaks already at n=2, m=0)
    for n in range(9):
        for kk in range(n + 1):
            alpha1 = Poly()
            for m in range(kk, n + 1):
                alpha1 = alpha1 + binom_poly(n - 1, 1, n - m) * (
                    F((-1) ** (m - kk) * factorial(n), factorial(m)) * stirling1(m, kk)
                )
            alpha2 = Poly()
            for m in range(kk, n + 1):
                alpha2 = alpha2 + binom_poly(n - m - 1, 1, n - m) * (
                    F(factorial(n), factorial(m)) * stirling1(m, kk)
                )
            assert alpha1 == gsn1(n, kk)
            assert alpha2 == gsn1(n, kk)


def test_bivariate_first_kind():
    assert gsn1_bivariate(2, 1) == Poly([Poly([0, 1]), Poly([2])])  # q + 2y
    for n in range(6):
        for m in range(n + 1):
            assert gsn1_bivariate_at(n, m, 0, 1) == stirling1(n, m)
    # product generating identity at sample points
    y, q = F(1, 2), F(-3)
    for n in range(6):
        product = Poly([1])
        for j in range(n):
            product = product * Poly([-(y + j * q), 1])
        expanded = Poly()
        for m in range(n + 1):
            expanded = expanded + Poly([0] * m + [(-1) ** (n - m) * gsn1_bivariate_at(n, m, y, q)])
        assert product == expanded


def test_bivariate_reduces_to_shifted_at_unit_step():
    # fixing q = 1 recovers the single-shift polynomials in y
    for n in range(7):
        for m in range(n + 1):
            fixed = gsn1_bivariate(n, m).map_coeffs(
                lambda c: F(c(F(1))) if isinstance(c, Poly) else F(c)
            )
            assert fixed == gsn1(n, m)


def test_concurrent_triangle_fill():
    import threading

    results = []

    def worker():
        results.append(stirling1(40, 7))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(results)) == 1


def test_bivariate_second_kind():
    assert gsn2_bivariate_at(1, 1, F(2), F(5)) == 1
    # numerator carries the cleared q^m denominator
    y, q = F(2, 3), F(1, 2)
    for n in range(6):
        for m in range(n + 1):
            num = gsn2_bivariate_numerator(n, m)
            value = F(num(y)(q)) if isinstance(num(y), Poly) else F(num(y))
            assert value / q**m == gsn2_bivariate_at(n, m, y, q)
    with pytest.raises(ValueError):
        gsn2_bivariate_at(2, 1, F(1), 0)


def test_whitney_examples_and_cross_checks():
    assert whitney("first", 1, 0, 4, 2) == stirling1(4, 2)
    assert whitney("first", 2, 1, 2, 1) == 4
    assert whitney("second", 2, 1, 2, 1) == 4
    for m in (1, 2, -2, 3):
        for r in (-2, 0, 1, 3):
            for n in range(6):
                for l in range(n + 1):
                    direct_w = sum(
                        comb(j, l) * m ** (n - j) * r ** (j - l) * stirling1(n, j)
                        for j in range(l, n + 1)
                    )
                    direct_big = sum(
                        comb(n, j) * m ** (j - l) * r ** (n - j) * stirling2(j, l)
                        for j in range(l, n + 1)
                    )
                    assert whitney("first", m, r, n, l) == direct_w
                    assert whitney("second", m, r, n, l) == direct_big
    with pytest.raises(ValueError):
        whitney("first", 0, 1, 2, 1)
    with pytest.raises(ValueError):
        whitney("third", 1, 1, 2, 1)


def test_a_number():
    assert a_number(2, 2) == Poly([1])
    assert a_number(5, 5) == Poly([1])
    assert a_number(2, 0) == Poly([0, 1, 1])
    assert a_number(2, 1) == Poly([2, 2])
    # recurrence: value(n+1, m) = value(n, m-1) + (n + m + x) value(n, m)
    for n in range(10):
        for m in range(n + 1):
            prev = a_number(n, m - 1) if m >= 1 else Poly()
            assert a_number(n + 1, m) == prev + Poly([n + m, 1]) * a_number(n, m)


def test_triangle_rows_listing():
    rows = triangle_rows("stirling2", 3)
    assert rows[0] == (0, 0, 1)
    assert (3, 2, 3) in rows
    assert len(rows) == 10


def test_cache_save_load_round_trip(tmp_path):
    expected = stirling1(12, 3)
    assert save_triangle_caches(str(tmp_path)) == str(tmp_path)
    assert (tmp_path / "stirling1.tsv").exists()
    assert load_triangle_caches(str(tmp_path))
    assert stirling1(12, 3) == expected
    assert stirling1(3, 2) == 3


def test_cache_load_missing_dir():
    assert load_triangle_caches("/nonexistent/path/xyz") is False
