"""cos(p pi / q) to high precision.

Two routes:

* generic: reduce the angle to [0, pi/4] with exact integer arithmetic and
  call the MPFR sine or cosine;
* minpoly: cos(p pi / q) is a root of the scaled minimal polynomial
  2^d Phi_n(x) of cos(2 pi / n), so refine a double-precision seed by Newton
  iteration with the working precision doubling at each step.

The minpoly route wins only at high precision and small q; see
:func:`select_cos_path`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import gmpy2
from gmpy2 import mpfr, mpz

from ._minpoly_table import MINPOLY_TABLE
from .modarith import factorize
from .numctx import DomainError, NumericContext, const_pi

MINPOLY_MAX_N = 512
MINPOLY_MAX_Q = 250
MINPOLY_BASE_BITS = 400
MINPOLY_BITS_PER_Q2 = 4
SEED_BITS = 53


class UnsupportedError(ValueError):
    """Requested polynomial is outside the configured range."""


@dataclass(frozen=True)
class MinPolyData:
    n: int
    d: int
    coeffs: tuple[int, ...]  # constant term first
    coeff_bound: int  # every |coefficient| < 2**coeff_bound


def euler_phi(n: int) -> int:
    out = n
    for p, _ in factorize(n):
        out -= out // p
    return out


def coefficient_bits(d: int) -> int:
    # |[x^j] prod(2x - 2 alpha)| <= 2^d binom(d, j) since |alpha| <= 1
    return math.ceil(math.log2(d + 1)) + d + math.ceil(math.log2(math.comb(d, d // 2)))


def _polymul(f: list[int], g: list[int], shift: int) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    half = 1 << (shift - 1)
    return [(c + half) >> shift for c in out]


def _product_tree(polys: list[list[int]], shift: int) -> list[int]:
    while len(polys) > 1:
        nxt = [_polymul(polys[i], polys[i + 1], shift) for i in range(0, len(polys) - 1, 2)]
        if len(polys) % 2:
            nxt.append(polys[-1])
        polys = nxt
    return polys[0]


def _build_minpoly(n: int, d: int, b: int, extra_bits: int = 0) -> tuple[int, ...]:
    # fixed-point coefficients with w fractional bits
    w = b + math.ceil(4 * math.log2(d + 1)) + 16 + extra_bits
    work = NumericContext(max(w + 16, 53))
    ctx = work.mpfr
    two_pi_n = ctx.div(ctx.mul(2, const_pi(work)), n)
    two = 2 << w
    factors = []
    for i in range(1, (n + 1) // 2):
        if math.gcd(i, n) == 1:
            root = ctx.mul(2, ctx.cos(ctx.mul(two_pi_n, i)))
            factors.append([-int(ctx.rint(ctx.mul_2exp(root, w))), two])
    poly = _product_tree(factors, w)
    half = 1 << (w - 1)
    return tuple(int((c + half) >> w) for c in poly)


def cos_minpoly(n: int, max_n: int = MINPOLY_MAX_N, extra_bits: int = 0) -> MinPolyData:
    """2^d Phi_n(x) for n >= 3, d = phi(n)/2.

    Served from a table for n <= 32, otherwise built on demand from a
    balanced product tree over fixed-point approximations of the conjugates
    2 cos(2 pi i / n), gcd(i, n) = 1, and rounded to integers.  Nothing is
    cached.
    """
    if n < 3:
        raise DomainError("cos_minpoly needs n >= 3")
    if n > max_n:
        raise UnsupportedError(f"n = {n} exceeds the minimal polynomial bound {max_n}")
    d = euler_phi(n) // 2
    b = coefficient_bits(d)
    if n in MINPOLY_TABLE and not extra_bits:
        coeffs = MINPOLY_TABLE[n]
    else:
        coeffs = _build_minpoly(n, d, b, extra_bits)
    return MinPolyData(n, d, coeffs, b)


def select_cos_path(
    q: int,
    r: int,
    max_q: int = MINPOLY_MAX_Q,
    base_bits: int = MINPOLY_BASE_BITS,
    bits_per_q2: int = MINPOLY_BITS_PER_Q2,
    max_n: int = MINPOLY_MAX_N,
) -> str:
    """'minpoly' when Newton on the minimal polynomial should beat MPFR."""
    if q < max_q and r > base_bits + bits_per_q2 * q * q and 2 * q <= max_n:
        return "minpoly"
    return "generic"


def reduce_angle(p: int, q: int) -> tuple[int, bool, int, int]:
    """Write cos(p pi / q) as sign * f(p' pi / q') with p' pi / q' in [0, pi/4].

    Returns ``(sign, use_sin, p', q')``.
    """
    p %= 2 * q
    if p > q:
        p = 2 * q - p
    sign = 1
    if 2 * p > q:
        p = q - p
        sign = -1
    if 4 * p > q:
        return sign, True, q - 2 * p, 2 * q
    return sign, False, p, q


def cos_pi_double(p: int, q: int) -> float:
    """cos(p pi / q) in hardware doubles, argument reduced to [0, pi/4] first."""
    sign, use_sin, p, q = reduce_angle(p, q)
    x = p * math.pi / q
    v = math.sin(x) if use_sin else math.cos(x)
    return -v if sign < 0 else v


def _cos_generic(p: int, q: int, r: int) -> mpfr:
    sign, use_sin, p, q = reduce_angle(p, q)
    work = NumericContext(r + 10)
    x = work.mpfr.div(work.mpfr.mul(const_pi(work), p), q)
    c = gmpy2.context(precision=r)
    v = c.sin(x) if use_sin else c.cos(x)
    return c.minus(v) if sign < 0 else v


def newton_ladder(r: int) -> list[int]:
    """Precisions r + 8, (r + 8)/2 + 8, ... down to the first one below the seed."""
    precs = [r + 8]
    while precs[-1] >= SEED_BITS:
        precs.append(precs[-1] // 2 + 8)
    return precs


def _cos_minpoly(p: int, q: int, r: int) -> mpfr:
    n = (1 + p % 2) * q
    poly = cos_minpoly(n)
    coeffs = [mpz(c) for c in poly.coeffs]
    lead = coeffs[-1]
    rest = coeffs[-2::-1]
    x = mpfr(cos_pi_double(p, q), SEED_BITS)
    for prec in reversed(newton_ladder(r)[:-1]):
        c = gmpy2.context(precision=prec + poly.coeff_bound)
        f, df = c.plus(lead), mpfr(0)
        for a in rest:
            df = c.add(c.mul(df, x), f)
            f = c.add(c.mul(f, x), a)
        x = c.sub(x, c.div(f, df))
    return gmpy2.context(precision=r).plus(x)


def cos_pi_rational(p: int, q: int, r: int, path: str | None = None) -> mpfr:
    """cos(p pi / q) accurate to r bits, returned as an r-bit float.

    ``path`` forces 'generic' or 'minpoly'; by default
    :func:`select_cos_path` decides.
    """
    if q < 1:
        raise DomainError("q must be positive")
    if math.gcd(p, q) != 1:
        raise DomainError(f"cos_pi_rational needs gcd(p, q) = 1, got ({p}, {q})")
    if q == 1:
        return mpfr(-1 if p % 2 else 1, r)
    if q == 2:
        return mpfr(0, r)
    if path is None:
        path = select_cos_path(q, r)
    if path == "minpoly" and (1 + p % 2) * q <= MINPOLY_MAX_N:
        return _cos_minpoly(p, q, r)
    return _cos_generic(p, q, r)


def horner(poly: MinPolyData, x: mpfr, r: int) -> mpfr:
    """Evaluate the polynomial at x with r-bit Horner steps."""
    c = gmpy2.context(precision=r)
    return reduce(lambda acc, a: c.add(c.mul(acc, x), a), reversed(poly.coeffs[:-1]), mpfr(poly.coeffs[-1], r))
