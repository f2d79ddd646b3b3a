"""Arbitrary-precision floating-point context.

Every numerical routine in the package takes a :class:`NumericContext`
explicitly instead of reading a global precision.  Arithmetic is delegated
to MPFR (through gmpy2), which rounds every basic operation correctly to
nearest and evaluates exp/sin/cos/sinh/cosh with correct rounding as well,
so the error contract below holds with room to spare:

* ``arith``     relative error <= eps (0.5 ulp)
* ``transcend`` relative error <= 2 eps (1 ulp)
* ``const_pi``  relative error <= eps

where ``eps = 2**-precision``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

import gmpy2
from gmpy2 import mpfr

MIN_PRECISION = 53


class DomainError(ValueError):
    """Operand outside the domain of an operation."""


class RangeError(ArithmeticError):
    """Result overflows the exponent range."""


@dataclass(frozen=True)
class NumericContext:
    precision: int
    _mpfr: gmpy2.context = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.precision < MIN_PRECISION:
            raise ValueError(f"precision {self.precision} below the {MIN_PRECISION}-bit floor")
        object.__setattr__(self, "_mpfr", gmpy2.context(precision=self.precision))

    @property
    def eps(self) -> Fraction:
        """Unit roundoff 2**-precision, exactly."""
        return Fraction(1, 1 << self.precision)

    @property
    def mpfr(self) -> gmpy2.context:
        """The underlying gmpy2 context (rounds to ``precision`` bits)."""
        return self._mpfr

    def with_precision(self, precision: int) -> NumericContext:
        return NumericContext(max(precision, MIN_PRECISION))

    def round(self, x) -> mpfr:
        """Round an exact or floating value to this precision."""
        if isinstance(x, Fraction):
            return self._mpfr.div(gmpy2.mpz(x.numerator), gmpy2.mpz(x.denominator))
        return self._mpfr.plus(x)


_ARITH = ("add", "sub", "mul", "div", "sqrt")
_TRANSCEND = ("exp", "sin", "cos", "sinh", "cosh")


_EXACT = (int, Fraction, type(gmpy2.mpz(0)), type(gmpy2.mpq(0)))


def _finite(x):
    if isinstance(x, _EXACT):
        return True
    return gmpy2.is_finite(x if isinstance(x, type(mpfr(0))) else mpfr(x))


def _checked(result):
    if result.is_infinite():
        raise RangeError("exponent range exceeded")
    return result


def arith(op: str, *operands, ctx: NumericContext) -> mpfr:
    """Correctly rounded ``add``/``sub``/``mul``/``div``/``sqrt`` at ``ctx.precision``."""
    if op not in _ARITH:
        raise ValueError(f"unknown operation {op!r}")
    if not all(_finite(x) for x in operands):
        raise DomainError(f"{op}: non-finite operand")
    c = ctx.mpfr
    if op == "sqrt":
        (x,) = operands
        if x < 0:
            raise DomainError("sqrt of negative number")
        return c.sqrt(x)
    x, y = operands
    if op == "div" and y == 0:
        raise DomainError("division by zero")
    return _checked(getattr(c, op)(x, y))


def transcend(f: str, x, ctx: NumericContext) -> mpfr:
    """exp/sin/cos/sinh/cosh of ``x`` rounded to ``ctx.precision``."""
    if f not in _TRANSCEND:
        raise ValueError(f"unknown function {f!r}")
    if not _finite(x):
        raise DomainError(f"{f}: non-finite argument")
    return _checked(getattr(ctx.mpfr, f)(x))


_pi_lock = threading.Lock()
_pi_cache: mpfr | None = None


def const_pi(ctx: NumericContext) -> mpfr:
    """pi rounded to ``ctx.precision`` bits.

    The highest-precision value computed so far is kept; requests at equal or
    lower precision are served by rounding it, which is a single correct
    rounding because the cached value carries extra guard bits.
    """
    global _pi_cache
    r = ctx.precision
    cached = _pi_cache
    if cached is None or cached.precision < r + 32:
        with _pi_lock:
            cached = _pi_cache
            if cached is None or cached.precision < r + 32:
                work = max(r + 32, 2 * cached.precision if cached is not None else 0)
                cached = gmpy2.context(precision=work).const_pi()
                _pi_cache = cached
    return ctx.mpfr.plus(cached)
