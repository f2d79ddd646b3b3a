"""p(n) from the Hardy-Ramanujan-Rademacher series.

    p(n) = sum_{k=1}^{N} sqrt(3/k) * 4/(24n-1) * A_k(n) * U(C/k) + R(n, N)

with U(x) = cosh(x) - sinh(x)/x and C = (pi/6) sqrt(24n - 1).

Error budget: N is chosen so that Rademacher's remainder bound is below
1/4, each term is evaluated to within 1/(8N) and every addition loses at
most another 1/(8N), so the floating sum is within 1/2 of p(n).

Term k needs about C/(k log 2) bits, so precision falls off like 1/k.  Once
it reaches 53 bits the remaining terms are done in hardware doubles.  The
partial sums are kept in two accumulators (s1 at full precision, s2 at the
precision of the current block of terms) so that adding a small term costs
time proportional to its own size rather than the size of p(n).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import gmpy2
from gmpy2 import mpfr, mpq, mpz

from ._fasttail import tail_sum
from ._small_table import SMALL_PARTITIONS
from .expsum import ak_factor
from .numctx import MIN_PRECISION, NumericContext, const_pi
from .trig import cos_pi_double, cos_pi_rational

ROOT_K_MAX = 35  # U from the k-th root of exp(C) below this k
TRUNCATION_TARGET = 0.25
TERM_PAD = 4  # extra bits on every term precision
ACCUMULATOR_PAD = 32  # s1 carries r1 + 32 bits

_LOG2 = math.log(2)
_LOG2_CONST = (math.log(2) + math.log(3) / 2) / _LOG2


@dataclass(frozen=True)
class HrrPlan:
    n: int
    N: int
    r1: int
    C: mpfr  # rounded to r1 + 3 bits
    expC: mpfr

    @property
    def C_float(self) -> float:
        return float(self.C)


@dataclass(frozen=True)
class PartitionResult:
    value: int
    n: int
    terms_used: int
    residual: float
    timings: dict = field(default_factory=dict, compare=False, repr=False)


def remainder_bound(n: int, N: int) -> mpfr:
    """Rademacher's bound M(n, N) on the truncation error after N terms.

    Every operation is rounded in the direction that can only increase the
    result, so the returned 64-bit float is a true upper bound.
    """
    if n < 2 or N < 1:
        raise ValueError("remainder_bound needs n >= 2 and N >= 1")
    up = gmpy2.context(precision=64, round=gmpy2.RoundUp)
    dn = gmpy2.context(precision=64, round=gmpy2.RoundDown)
    pi_up = up.const_pi()
    first = up.div(up.mul(44, up.square(pi_up)), dn.mul(225, dn.sqrt(3)))
    first = up.div(first, dn.sqrt(N))
    second = up.div(up.mul(pi_up, up.sqrt(2)), 75)
    second = up.mul(second, up.sqrt(up.div(N, dn.add(mpz(n), -1))))
    arg = up.mul(up.div(pi_up, N), up.sqrt(up.div(up.mul(2, mpz(n)), 3)))
    second = up.mul(second, up.sinh(arg))
    return up.add(first, second)


def choose_terms(n: int, target: float = TRUNCATION_TARGET) -> int:
    """Smallest N with remainder_bound(n, N) < target.

    The bound decreases in N, so bracket by doubling and then bisect.
    """
    hi = 1
    while remainder_bound(n, hi) >= target:
        hi *= 2
    lo = hi // 2  # bound(lo) >= target or lo == 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if remainder_bound(n, mid) < target:
            hi = mid
        else:
            lo = mid
    return hi


def term_magnitude_bound(k: int, n: int) -> float:
    """Upper bound on log2 |t_k| using |A_k| <= k and U(x) < e^x / 2."""
    m = 24 * n - 1
    return (math.sqrt(m) * math.pi / (6 * k)) / _LOG2 + 0.5 * math.log2(k) - math.log2(m) + _LOG2_CONST


def term_precision(k: int, n: int, N: int) -> int:
    """Working precision (bits) that keeps term k within 1/(8N) of its true value.

    The k-dependent factors that grow with k (sqrt(k) in the magnitude
    bound and the cosine count m <= log2 k) are taken at k = N, which keeps
    the bound valid and makes the sequence non-increasing in k.
    """
    m = 24 * n - 1
    x = math.sqrt(m) * math.pi / (6 * k)
    log_n = math.log2(N)
    mag = x / _LOG2 + 0.5 * log_n - math.log2(m) + _LOG2_CONST
    r = max(log_n + mag + math.log2(10 * x + 7 * log_n + 22) + 3, 0.5 * math.log2(n) + 5, 11)
    return max(math.ceil(r) + TERM_PAD, MIN_PRECISION)


def choose_plan(n: int) -> HrrPlan:
    if n < 128:
        raise ValueError("the series is only used for n >= 128")
    N = choose_terms(n)
    r1 = term_precision(1, n, N)
    work = NumericContext(r1 + 3)
    c = work.mpfr
    C = c.mul(c.div(const_pi(work), 6), c.sqrt(mpz(24 * n - 1)))
    return HrrPlan(n, N, r1, C, c.exp(C))


def eval_U(k: int, plan: HrrPlan, r: int, method: str | None = None) -> mpfr:
    """U(C/k) at r bits.

    For k < ROOT_K_MAX, cosh and sinh come from y = exp(C)^(1/k); otherwise
    from the MPFR hyperbolic functions.  ``method`` ('root' or 'direct')
    overrides the choice.
    """
    c = gmpy2.context(precision=r)
    x = c.div(plan.C, k)
    if method is None:
        method = "root" if k < ROOT_K_MAX else "direct"
    if method == "root":
        y = c.plus(plan.expC) if k == 1 else c.rootn(plan.expC, k)
        yi = c.div(1, y)
        ch = c.mul_2exp(c.add(y, yi), -1)
        sh = c.mul_2exp(c.sub(y, yi), -1)
    else:
        sh, ch = c.sinh_cosh(x)
    return c.sub(ch, c.div(sh, x))


def U_double(x: float) -> float:
    return math.cosh(x) - math.sinh(x) / x


def _term_mp(fac, k: int, n: int, plan: HrrPlan, r: int) -> mpfr:
    c = gmpy2.context(precision=r)
    t = c.sqrt(mpq(3 * fac.a, k * fac.b))
    for ang in fac.angles:
        t = c.mul(t, cos_pi_rational(ang.p, ang.q, r))
    t = c.div(c.mul(t, 4 * fac.sign), mpz(24 * n - 1))
    return c.mul(t, eval_U(k, plan, r))


def _term_double(fac, k: int, n: int, x: float) -> float:
    t = fac.sign * math.sqrt(3 * fac.a / (k * fac.b))
    for ang in fac.angles:
        t *= cos_pi_double(ang.p, ang.q)
    return t * 4 / (24 * n - 1) * U_double(x)


def partition_hrr(
    n: int, amortized: bool = True, force_mp: bool = False, force_python_tail: bool = False
) -> PartitionResult:
    """Exact p(n).

    ``amortized=False`` sums every term into one full-precision accumulator;
    ``force_mp=True`` keeps the whole tail in MPFR instead of doubles, and
    ``force_python_tail=True`` skips the compiled double loop.  All three
    exist for testing and must not change the result.
    """
    n = int(n)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n < 128:
        return PartitionResult(SMALL_PARTITIONS[n], n, 0, 0.0)

    t0 = time.perf_counter()
    plan = choose_plan(n)
    N, r1 = plan.N, plan.r1
    acc = gmpy2.context(precision=r1 + ACCUMULATOR_PAD)
    s1 = mpfr(0)
    s2 = mpfr(0)
    rs2 = r1
    t_first = None
    C_float = plan.C_float

    k = 1
    while k <= N:
        r = term_precision(k, n, N)
        if r <= MIN_PRECISION and not force_mp:
            break
        fac = ak_factor(k, n)
        if not fac.zero:
            t = _term_mp(fac, k, n, plan, r)
            if not amortized:
                s1 = acc.add(s1, t)
            else:
                s2 = gmpy2.context(precision=rs2).add(s2, t)
                if 2 * r < rs2:
                    s1 = acc.add(s1, s2)
                    rs2 = r
                    s2 = mpfr(0)
        if k == 1:
            t_first = time.perf_counter() - t0
        k += 1
    s1 = acc.add(s1, s2)

    # hardware-double tail
    n24 = 24 * n - 1
    tail = None if force_python_tail else tail_sum(n, k, N, C_float)
    if tail is not None:
        tail *= 4 / n24
    else:
        tail = 0.0
        for k in range(k, N + 1):
            fac = ak_factor(k, n)
            if not fac.zero:
                tail += _term_double(fac, k, n, C_float / k)
    s = acc.add(s1, tail)

    value = int(acc.floor(acc.add(s, 0.5)))
    residual = float(acc.sub(s, value))
    total = time.perf_counter() - t0
    timings = {"total": total, "first_term": t_first if t_first is not None else 0.0}
    return PartitionResult(value, n, N, residual, timings)


def p(n: int) -> int:
    """Shorthand for ``partition_hrr(n).value``."""
    return partition_hrr(n).value
