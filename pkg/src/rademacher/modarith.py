"""Word-size modular arithmetic for the exponential-sum factorization.

Everything here operates on Python ints; moduli that arise while factoring
A_k(n) are at most 24k, far below 2**64 for any n whose p(n) fits in memory.
"""

from __future__ import annotations

import math
from typing import Iterator, NamedTuple

from .numctx import DomainError

WORD = 1 << 64


class NoInverseError(ArithmeticError):
    """Raised by :func:`mod_inv` when gcd(a, m) != 1."""


class PrimePower(NamedTuple):
    p: int
    exp: int

    @property
    def value(self) -> int:
        return self.p**self.exp


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def mod_inv(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m`` in ``[0, m)``."""
    if m < 2:
        raise DomainError("modulus must be at least 2")
    try:
        return pow(a, -1, m)
    except ValueError:
        raise NoInverseError(f"{a} is not invertible modulo {m}") from None


def jacobi(a: int, m: int) -> int:
    """Jacobi symbol (a|m) for odd positive ``m``."""
    if m <= 0 or m % 2 == 0:
        raise DomainError(f"Jacobi symbol needs an odd positive modulus, got {m}")
    a %= m
    s = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                s = -s
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            s = -s
        a %= m
    return s if m == 1 else 0


def sqrt_mod_prime(a: int, p: int) -> int | None:
    """Square root of ``a`` modulo an odd prime ``p`` (Tonelli-Shanks).

    Returns None when ``a`` is a nonresidue.  The nonresidue the algorithm
    needs is found by trying 2, 3, 4, ... on each call.
    """
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    x = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return x


def _sqrt_mod_2k(a: int, k: int) -> int | None:
    mod = 1 << k
    a %= mod
    if a == 0:
        return 0
    if k == 1:
        return a
    if k == 2:
        return 1 if a == 1 else None
    if a % 2 == 0:
        # a = 4^j * a', root = 2^j * root(a') modulo 2^(k - j)
        v = (a & -a).bit_length() - 1
        if v % 2:
            return None
        r = _sqrt_mod_2k(a >> v, k - v)
        return None if r is None else (r << (v // 2)) % mod
    if a % 8 != 1:
        return None
    # lift x^2 = a from mod 8 upward; x stays odd
    x = 1
    for j in range(3, k):
        if (x * x - a) % (1 << (j + 1)):
            x += 1 << (j - 1)
    half = mod >> 1
    return min(x % mod, -x % mod, (x + half) % mod, (half - x) % mod)


def sqrt_mod_prime_power(a: int, pp: PrimePower) -> int | None:
    """Square root of ``a`` modulo ``p**exp`` or None if there is none.

    Odd p: Tonelli-Shanks modulo p followed by Hensel lifting.  p = 2 uses
    the usual bit-by-bit lifting from the residue modulo 8.  The smallest
    nonnegative root found is returned so the result is deterministic.
    """
    p, e = pp
    if p == 2:
        return _sqrt_mod_2k(a, e)
    mod = p**e
    a %= mod
    if a == 0:
        return 0
    if a % p == 0:
        v = 0
        while a % p == 0:
            a //= p
            v += 1
        if v % 2:
            return None
        r = sqrt_mod_prime_power(a, PrimePower(p, e - v))
        return None if r is None else r * p ** (v // 2) % mod
    x = sqrt_mod_prime(a % p, p)
    if x is None:
        return None
    pk = p
    while pk < mod:
        pk = min(pk * pk, mod)
        # Newton step x <- x - (x^2 - a) / (2x)
        x = (x - (x * x - a) * pow(2 * x, -1, pk)) % pk
    return min(x, mod - x)


_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


def factorize(k: int) -> list[PrimePower]:
    """Prime factorization of ``k`` by trial division (2, 3, 5, then a mod-30 wheel)."""
    if k < 1:
        raise DomainError("factorize needs k >= 1")
    out = []
    for p in (2, 3, 5):
        if k % p == 0:
            e = 0
            while k % p == 0:
                k //= p
                e += 1
            out.append(PrimePower(p, e))
    p, i = 7, 0
    while p * p <= k:
        if k % p == 0:
            e = 0
            while k % p == 0:
                k //= p
                e += 1
            out.append(PrimePower(p, e))
        p += _WHEEL[i]
        i = (i + 1) & 7
    if k > 1:
        out.append(PrimePower(k, 1))
    return out


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for all n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_between(lo: int, hi: int, segment: int = 1 << 16) -> Iterator[int]:
    """Primes in ``[lo, hi]`` from a segmented sieve of Eratosthenes."""
    lo = max(lo, 2)
    if hi < lo:
        return
    root = math.isqrt(hi)
    base = bytearray([1]) * (root + 1)
    base[:2] = b"\0\0"
    for i in range(2, math.isqrt(root) + 1):
        if base[i]:
            base[i * i :: i] = bytes(len(range(i * i, root + 1, i)))
    small = [i for i in range(2, root + 1) if base[i]]
    for start in range(lo, hi + 1, segment):
        stop = min(start + segment, hi + 1)
        seg = bytearray([1]) * (stop - start)
        for p in small:
            first = max(p * p, -(-start // p) * p)
            if first >= stop:
                continue
            seg[first - start :: p] = bytes(len(range(first, stop, p)))
        for i, flag in enumerate(seg):
            if flag:
                yield start + i
