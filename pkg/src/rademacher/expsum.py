"""The exponential sums A_k(n) of the Rademacher series.

Three independent evaluations are provided:

``ak_naive``
    the defining sum over h coprime to k, with exact Dedekind sums;
``ak_selberg``
    Selberg's cosine formula, O(k) integer steps and O(sqrt k) cosines;
``ak_factor``
    Whiteman's multiplicative decomposition, which needs O(log k) modular
    square roots and returns the sum *symbolically* as
    ``sign * sqrt(a/b) * prod(cos(p_i pi / q_i))``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

import gmpy2

from .modarith import PrimePower, _sqrt_mod_2k, factorize, sqrt_mod_prime, sqrt_mod_prime_power
from .numctx import DomainError, NumericContext, const_pi

DedekindSum = Fraction


def dedekind_sum_naive(h: int, k: int) -> DedekindSum:
    """s(h, k) straight from the sawtooth definition; O(k) rational additions."""
    if k < 1:
        raise DomainError("k must be positive")
    total = Fraction(0)
    for i in range(1, k):
        hi = h * i
        total += Fraction(i, k) * (Fraction(hi % k, k) - Fraction(1, 2))
    return total


def dedekind_sum(h: int, k: int) -> DedekindSum:
    """s(h, k) in O(log k) steps using reciprocity and periodicity in h."""
    if k < 1:
        raise DomainError("k must be positive")
    if math.gcd(h, k) != 1:
        raise DomainError(f"dedekind_sum needs gcd(h, k) = 1, got ({h}, {k})")
    h %= k
    total = Fraction(0)
    sign = 1
    # s(h,k) = -s(k,h) - 1/4 + (h/k + k/h + 1/(hk)) / 12
    while h != 0:
        total += sign * (Fraction(h * h + k * k + 1, 12 * h * k) - Fraction(1, 4))
        sign = -sign
        h, k = k % h, h
    return total


def _cos_pi_exact(x: Fraction, ctx: NumericContext):
    """cos(pi * x) for a rational x, at ctx precision (plain MPFR cosine)."""
    x = x % 2
    c = ctx.mpfr
    work = gmpy2.context(precision=ctx.precision + 16)
    arg = work.mul(const_pi(NumericContext(ctx.precision + 16)), gmpy2.mpq(x.numerator, x.denominator))
    return c.cos(arg)


def ak_naive(k: int, n: int, ctx: NumericContext):
    """A_k(n) as the sum of cos(pi (s(h,k) - 2hn/k)) over h coprime to k."""
    if k < 1:
        raise DomainError("k must be positive")
    c = ctx.mpfr
    total = gmpy2.mpfr(0)
    for h in range(k):
        if math.gcd(h, k) == 1:
            total = c.add(total, _cos_pi_exact(dedekind_sum(h, k) - Fraction(2 * h * n, k), ctx))
    return total


def ak_selberg(k: int, n: int, ctx: NumericContext):
    """A_k(n) by Selberg's formula, looping over 0 <= l < 2k.

    ``m`` tracks (3l^2 + l)/2 + n mod k and ``r`` its forward difference, so
    the loop body is additions and comparisons only.
    """
    if k <= 1:
        return gmpy2.mpfr(k)
    if k == 2:
        return gmpy2.mpfr(-1 if n % 2 else 1)
    c = ctx.mpfr
    work = NumericContext(ctx.precision + 16)
    pi = const_pi(work)
    s = gmpy2.mpfr(0)
    r, m = 2, n % k
    for l in range(2 * k):
        if m == 0:
            term = work.mpfr.cos(work.mpfr.div(work.mpfr.mul(pi, 6 * l + 1), 6 * k))
            s = work.mpfr.sub(s, term) if l & 1 else work.mpfr.add(s, term)
        m += r
        if m >= k:
            m -= k
        r += 3
        if r >= k:
            r -= k
    return c.mul(c.sqrt(gmpy2.mpq(k, 3)), s)


class CosineAngle(NamedTuple):
    """The angle p*pi/q, stored reduced with 0 < p/q < 1/2."""

    p: int
    q: int


class TermFactorization(NamedTuple):
    """A_k(n) = sign * sqrt(a / b) * prod(cos(angle)) exactly, or zero."""

    zero: bool = False
    sign: int = 1
    a: int = 1
    b: int = 1
    angles: tuple = ()

    def __float__(self) -> float:
        if self.zero:
            return 0.0
        v = self.sign * math.sqrt(self.a / self.b)
        for ang in self.angles:
            v *= math.cos(math.pi * ang.p / ang.q)
        return v

    def evaluate(self, ctx: NumericContext):
        """Numeric value at ctx precision (generic MPFR cosines)."""
        if self.zero:
            return gmpy2.mpfr(0)
        c = ctx.mpfr
        v = c.sqrt(gmpy2.mpq(self.a, self.b))
        for ang in self.angles:
            v = c.mul(v, _cos_pi_exact(Fraction(ang.p, ang.q), ctx))
        return v if self.sign > 0 else c.minus(v)

    def __str__(self) -> str:
        if self.zero:
            return "0"
        parts = ["-" if self.sign < 0 else "+", f"sqrt({self.a}/{self.b})"]
        parts += [f"cos({a.p}*pi/{a.q})" for a in self.angles]
        return " * ".join(parts)


ZERO = TermFactorization(zero=True)


def _jacobi3(k: int) -> int:
    # (3|k) for odd k prime to 3, by reciprocity
    return 1 if k % 12 in (1, 11) else -1


def _prime_power(k: int, p: int, lam: int, n: int):
    """Factor A_k(n) for k = p**lam.

    Returns ``(coef, surd, angle)`` meaning coef * sqrt(surd) * cos(angle[0]
    pi / angle[1]) with an integer surd and angle possibly None, or None if
    the sum vanishes.
    """
    if k == 1:
        return 1, 1, None
    if k == 2:
        return (-1 if n & 1 else 1), 1, None
    v = 1 - 24 * n
    if p == 2:
        mod = 8 * k
        m2 = _sqrt_mod_2k(v % mod, lam + 3) * pow(3, -1, mod) % mod
        # (-1)^lam (-1|m2)
        coef = 1 if (lam & 1) == (m2 % 4 == 3) else -1
        # sin(4 pi m2 / 8k) = cos(pi (k - m2) / 2k)
        return coef, k, (k - m2, 2 * k)
    if p == 3:
        mod = 3 * k
        m3 = sqrt_mod_prime_power(v % mod, PrimePower(3, lam + 1)) * pow(8, -1, mod) % mod
        # 2 (-1)^(lam+1) (m3|3)
        coef = 2 if (lam & 1) == (m3 % 3 == 1) else -2
        # sin(4 pi m3 / 3k) = cos(pi (3k - 8 m3) / 6k)
        return coef, k // 3, (3 * k - 8 * m3, 6 * k)
    vk = v % k
    if vk % p == 0:
        if lam == 1:
            return _jacobi3(k), k, None
        return None
    root = sqrt_mod_prime(vk, p) if lam == 1 else sqrt_mod_prime_power(vk, PrimePower(p, lam))
    if root is None:
        return None
    mp = root * pow(24, -1, k) % k
    return 2 * _jacobi3(k), k, (4 * mp, k)


def _split(k1: int, k2: int, n: int) -> tuple[int, int]:
    """(n1, n2) with A_{k1 k2}(n) = A_{k1}(n1) A_{k2}(n2), gcd(k1, k2) = 1."""
    if k1 == 2:
        n2 = (8 * n + 1) * pow(32, -1, k2) % k2
        n1 = (n - (k2 * k2 - 1) // 8) % 2
        return n1, n2
    if k1 == 4:
        n2 = (8 * n + 5) * pow(128, -1, k2) % k2
        # no extra -2 shift: A_4(n + 2) = -A_4(n) would flip the sign
        # (k2 is odd, so k2^2 = 1 mod 4)
        n1 = (n - (k2 * k2 - 1) // 8) % 4
        return n1, n2
    d1 = math.gcd(24, k1)
    d2 = math.gcd(24, k2)
    e = 24 // (d1 * d2)
    n1 = (d2 * e * n + (k2 * k2 - 1) // d1) * pow(k2 * k2 * d2 * e, -1, k1) % k1
    n2 = (d1 * e * n + (k1 * k1 - 1) // d2) * pow(k1 * k1 * d1 * e, -1, k2) % k2
    return n1, n2


def _normalize(p: int, q: int, sign: int):
    """Fold cos(p pi / q) into an angle in (0, pi/2); returns (angle, sign).

    angle is None when the cosine is +-1 (absorbed into sign).
    """
    p %= 2 * q
    if p > q:
        p = 2 * q - p
    if p == 0:
        return None, sign
    if p == q:
        return None, -sign
    if 2 * p > q:
        p = q - p
        sign = -sign
    g = math.gcd(p, q)
    return CosineAngle(p // g, q // g), sign


def ak_factor(k: int, n: int) -> TermFactorization:
    """Symbolic factorization of A_k(n) following Whiteman's formulas.

    k is split into prime powers in increasing order; each step peels off
    k1 = p^lam, solves for the arguments (n1, n2) of the two coprime
    factors, and evaluates A_{k1}(n1) in closed form.
    """
    if k < 1:
        raise DomainError("k must be positive")
    n %= k
    if k == 1:
        return TermFactorization()
    factors = factorize(k)
    coef = 1
    surd = 1
    angles = []
    last = len(factors) - 1
    for i, (p, lam) in enumerate(factors):
        k1 = p**lam
        if i < last:
            k2 = k // k1
            n1, n2 = _split(k1, k2, n)
        else:
            n1 = n
        part = _prime_power(k1, p, lam, n1)
        if part is None:
            return ZERO
        c, s, ang = part
        coef *= c
        surd *= s
        if ang is not None:
            angles.append(ang)
        if i < last:
            k, n = k2, n2
    sign = 1 if coef > 0 else -1
    # |coef| is a power of 2; move it under the root
    surd *= coef * coef
    out = []
    for p, q in angles:
        ang, sign = _normalize(p, q, sign)
        if ang is not None:
            out.append(ang)
    return TermFactorization(False, sign, surd, 1, tuple(out))
