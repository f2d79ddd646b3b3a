"""Compiled hardware-double tail of the Rademacher sum.

Terms whose working precision has dropped to 53 bits are evaluated here in
one numba loop: A_k(n) is factored with the same formulas as
:func:`rademacher.expsum.ak_factor`, but reduced straight to a double.

All modular arithmetic stays in int64; products are below (24k)^2, so the
kernel is only used when 24 N < MAX_MODULUS.  Outside that range (or with
numba missing) the caller falls back to the pure Python loop.
"""

from __future__ import annotations

import math

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None

MAX_MODULUS = 3 * 10**9  # (8k)^2 and k^2 * 24 must stay below 2^63


def _powmod(a, e, m):
    r = 1
    a %= m
    while e > 0:
        if e & 1:
            r = r * a % m
        a = a * a % m
        e >>= 1
    return r


def _invmod(a, m):
    a %= m
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return s0 % m


def _sqrt_mod_prime(a, p):
    # a is a nonzero residue; returns -1 for a nonresidue
    a %= p
    if _powmod(a, (p - 1) // 2, p) != 1:
        return -1
    if p % 4 == 3:
        return _powmod(a, (p + 1) // 4, p)
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while _powmod(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = _powmod(z, q, p)
    x = _powmod(a, (q + 1) // 2, p)
    t = _powmod(a, q, p)
    m = s
    while t != 1:
        i = 0
        t2 = t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = _powmod(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return x


def _sqrt_mod_odd_power(a, p, mod):
    # a prime to p; -1 for a nonresidue
    x = _sqrt_mod_prime(a, p)
    if x < 0:
        return -1
    pk = p
    while pk < mod:
        pk = min(pk * pk, mod)
        x = (x - (x * x - a) % pk * _invmod(2 * x, pk)) % pk
    return x


def _sqrt_mod_2k(a, e):
    # a = 1 mod 8, e >= 3
    mod = 1 << e
    x = 1
    for j in range(3, e):
        if (x * x - a) % (1 << (j + 1)) != 0:
            x += 1 << (j - 1)
    return x % mod


def _cos_pi(p, q):
    p %= 2 * q
    if p > q:
        p = 2 * q - p
    sign = 1.0
    if 2 * p > q:
        p = q - p
        sign = -1.0
    if 4 * p > q:
        return sign * math.sin((q - 2 * p) * math.pi / (2 * q))
    return sign * math.cos(p * math.pi / q)


def _jacobi3(k):
    r = k % 12
    return 1 if r == 1 or r == 11 else -1


def _prime_power(k, p, lam, n):
    if k == 2:
        return -1.0 if n & 1 else 1.0
    if p == 2:
        mod = 8 * k
        m2 = _sqrt_mod_2k((1 - 24 * n) % mod, lam + 3) * _invmod(3, mod) % mod
        coef = 1.0 if (lam & 1) == (1 if m2 % 4 == 3 else 0) else -1.0
        return coef * math.sqrt(k) * _cos_pi(k - m2, 2 * k)
    if p == 3:
        mod = 3 * k
        m3 = _sqrt_mod_odd_power((1 - 24 * n) % mod, 3, mod) * _invmod(8, mod) % mod
        coef = 2.0 if (lam & 1) == (1 if m3 % 3 == 1 else 0) else -2.0
        return coef * math.sqrt(k // 3) * _cos_pi(3 * k - 8 * m3, 6 * k)
    v = (1 - 24 * n) % k
    if v % p == 0:
        if lam == 1:
            return _jacobi3(k) * math.sqrt(k)
        return 0.0
    root = _sqrt_mod_odd_power(v, p, k)
    if root < 0:
        return 0.0
    mp = root * _invmod(24, k) % k
    return 2.0 * _jacobi3(k) * math.sqrt(k) * _cos_pi(4 * mp, k)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _ak_double(k, n):
    if k == 1:
        return 1.0
    val = 1.0
    p = 2
    while True:
        while k % p != 0:
            if p * p > k:
                p = k
                break
            p += 1 if p == 2 else 2
        lam = 0
        k1 = 1
        while k % p == 0:
            k //= p
            k1 *= p
            lam += 1
        k2 = k
        if k2 == 1:
            return val * _prime_power(k1, p, lam, n)
        if k1 == 2:
            n2 = (8 * n + 1) * _invmod(32, k2) % k2
            n1 = (n - (k2 * k2 - 1) // 8) % 2
        elif k1 == 4:
            n2 = (8 * n + 5) * _invmod(128, k2) % k2
            n1 = (n - (k2 * k2 - 1) // 8) % 4
        else:
            d1 = _gcd(24, k1)
            d2 = _gcd(24, k2)
            e = 24 // (d1 * d2)
            n1 = (d2 * e * n + (k2 * k2 - 1) // d1) % k1 * _invmod(k2 % k1 * k2 % k1 * d2 * e, k1) % k1
            n2 = (d1 * e * n + (k1 * k1 - 1) // d2) % k2 * _invmod(k1 % k2 * k1 % k2 * d1 * e, k2) % k2
        val *= _prime_power(k1, p, lam, n1)
        if val == 0.0:
            return 0.0
        n = n2
        p = 3 if p == 2 else p + 2


def _tail_sum(n_hi, n_lo, k0, N, C):
    two32 = 1 << 32
    total = 0.0
    for k in range(k0, N + 1):
        nk = ((n_hi % k) * (two32 % k) + n_lo % k) % k
        a = _ak_double(k, nk)
        if a != 0.0:
            x = C / k
            total += a * math.sqrt(3.0 / k) * (math.cosh(x) - math.sinh(x) / x)
    return total


if njit is not None:
    _powmod = njit(cache=True)(_powmod)
    _invmod = njit(cache=True)(_invmod)
    _sqrt_mod_prime = njit(cache=True)(_sqrt_mod_prime)
    _sqrt_mod_odd_power = njit(cache=True)(_sqrt_mod_odd_power)
    _sqrt_mod_2k = njit(cache=True)(_sqrt_mod_2k)
    _cos_pi = njit(cache=True)(_cos_pi)
    _jacobi3 = njit(cache=True)(_jacobi3)
    _prime_power = njit(cache=True)(_prime_power)
    _gcd = njit(cache=True)(_gcd)
    _ak_double = njit(cache=True)(_ak_double)
    _tail_sum = njit(cache=True)(_tail_sum)

AVAILABLE = njit is not None


def ak_double(k: int, n: int) -> float:
    """A_k(n) in double precision through the compiled factorization."""
    return _ak_double(k, n % k)


def tail_sum(n: int, k0: int, N: int, C: float) -> float | None:
    """sum_{k0 <= k <= N} A_k(n) sqrt(3/k) U(C/k), or None if out of range.

    The caller multiplies by 4/(24n - 1).
    """
    if not AVAILABLE or 24 * N >= MAX_MODULUS or n >= 1 << 94 or k0 > N:
        return None if k0 <= N else 0.0
    return _tail_sum(n >> 32, n & 0xFFFFFFFF, k0, N, C)
