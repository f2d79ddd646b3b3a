import math
from fractions import Fraction

import gmpy2
import pytest
from helpers import exact

from rademacher._minpoly_table import MINPOLY_TABLE
from rademacher.numctx import DomainError
from rademacher.trig import (
    UnsupportedError,
    _build_minpoly,
    _cos_generic,
    _cos_minpoly,
    coefficient_bits,
    cos_minpoly,
    cos_pi_double,
    cos_pi_rational,
    euler_phi,
    horner,
    newton_ladder,
    select_cos_path,
)


def test_small_polynomials():
    assert cos_minpoly(4).coeffs == (0, 2) and cos_minpoly(4).d == 1
    assert cos_minpoly(3).coeffs == (1, 2)
    p5 = cos_minpoly(5)
    assert p5.d == 2 and p5.coeffs == (-1, 2, 4)
    with pytest.raises(DomainError):
        cos_minpoly(2)
    with pytest.raises(UnsupportedError):
        cos_minpoly(600)


def test_table_matches_tree():
    for n, coeffs in MINPOLY_TABLE.items():
        d = euler_phi(n) // 2
        assert _build_minpoly(n, d, coefficient_bits(d)) == coeffs


@pytest.mark.parametrize("n", range(3, 129))
def test_degree_bound_and_root(n):
    poly = cos_minpoly(n)
    assert poly.d == euler_phi(n) // 2 == len(poly.coeffs) - 1
    assert poly.coeffs[-1] == 2**poly.d
    assert all(abs(c) < 2**poly.coeff_bound for c in poly.coeffs)
    c = gmpy2.context(precision=256)
    x = c.cos(c.div(c.mul(2, c.const_pi()), n))
    assert abs(horner(poly, x, 256 + poly.coeff_bound)) < gmpy2.mpfr(2) ** (poly.coeff_bound - 200)


@pytest.mark.parametrize("n", [33, 97, 128, 210, 331, 512])
def test_rounding_stable(n):
    poly = cos_minpoly(n)
    assert _build_minpoly(n, poly.d, poly.coeff_bound, extra_bits=poly.coeff_bound) == poly.coeffs


@pytest.mark.parametrize("n", range(129, 513, 7))
def test_root_large_n(n):
    poly = cos_minpoly(n)
    r = poly.coeff_bound + 256
    c = gmpy2.context(precision=r)
    x = c.cos(c.div(c.mul(2, c.const_pi()), n))
    assert abs(horner(poly, x, r)) < gmpy2.mpfr(2) ** -200


def test_exact_cases():
    for r in (53, 300):
        assert cos_pi_rational(1, 3, r) == 0.5
        assert cos_pi_rational(1, 1, r) == -1
        assert cos_pi_rational(0, 1, r) == 1
        assert cos_pi_rational(1, 2, r) == 0
    with pytest.raises(DomainError):
        cos_pi_rational(2, 4, 100)


def test_one_seventh():
    a = cos_pi_rational(1, 7, 1000, path="minpoly")
    b = _cos_generic(1, 7, 1064)
    assert abs(exact(a) - exact(b)) <= Fraction(1, 2**999)


def test_select_path():
    assert select_cos_path(5, 100) == "generic"
    assert select_cos_path(5, 10000) == "minpoly"
    assert select_cos_path(300, 10**6) == "generic"


@pytest.mark.parametrize("r", [64, 256, 1024])
def test_dual_path(r):
    for q in range(3, 51):
        for p in range(1, 2 * q):
            if math.gcd(p, q) != 1:
                continue
            a = _cos_minpoly(p, q, r)
            b = _cos_generic(p, q, r)
            assert abs(exact(a) - exact(b)) <= Fraction(1, 2 ** (r - 2)), (p, q, r)


def test_newton_ladder():
    ladder = newton_ladder(10000)
    assert ladder[0] == 10008 and ladder[-1] < 53
    assert all(b == a // 2 + 8 for a, b in zip(ladder, ladder[1:]))


def _lg(e):
    return e.numerator.bit_length() - e.denominator.bit_length()


@pytest.mark.parametrize("p,q", [(5, 37), (1, 49), (48, 97)])
def test_newton_convergence(p, q):
    # every step roughly doubles the correct bits until the step precision caps it
    r = 4000
    ref = exact(_cos_generic(p, q, r + 200))
    poly = cos_minpoly((1 + p % 2) * q)
    coeffs = [gmpy2.mpz(c) for c in poly.coeffs]
    x = gmpy2.mpfr(cos_pi_double(p, q), 53)
    prev = _lg(abs(exact(x) - ref))
    for prec in reversed(newton_ladder(r)[:-1]):
        c = gmpy2.context(precision=prec + poly.coeff_bound)
        f, df = c.plus(coeffs[-1]), gmpy2.mpfr(0)
        for a in coeffs[-2::-1]:
            df = c.add(c.mul(df, x), f)
            f = c.add(c.mul(f, x), a)
        x = c.sub(x, c.div(f, df))
        err = abs(exact(x) - ref)
        cur = _lg(err) if err else -(10**9)
        assert cur <= max(2 * prev + 16, -(prec - 4))
        prev = cur
    assert prev <= -r


def test_double_reduction():
    for q in range(1, 200):
        for p in range(-3 * q, 3 * q):
            assert abs(cos_pi_double(p, q) - math.cos(math.pi * p / q)) < 1e-14
