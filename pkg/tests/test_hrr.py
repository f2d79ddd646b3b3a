import math

import gmpy2
import mpmath
import pytest

from rademacher.expsum import ak_factor
from rademacher.hrr import (
    ROOT_K_MAX,
    U_double,
    _term_mp,
    choose_plan,
    choose_terms,
    eval_U,
    p,
    partition_hrr,
    remainder_bound,
    term_magnitude_bound,
    term_precision,
)
from rademacher.oracle import partition_vector


def test_remainder_bound_examples():
    assert remainder_bound(65, 9) < 0.5
    assert remainder_bound(10**12, 264526) < 0.25
    vals = [remainder_bound(10**6, N) for N in (10, 20, 40, 80, 160, 320, 640)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_sqrt_n_terms_suffice():
    # N = ceil(sqrt(n)) keeps the bound below 1/2 from n = 65 on
    for n in list(range(65, 400)) + [10**4, 10**6, 10**9]:
        assert remainder_bound(n, math.isqrt(n - 1) + 1) < 0.5


def test_choose_terms_minimal():
    for n in (128, 1000, 10**4, 10**6):
        N = choose_terms(n)
        assert remainder_bound(n, N) < 0.25 <= remainder_bound(n, N - 1)
    assert choose_plan(10**12).N == 264526


def test_plan_fields():
    plan = choose_plan(10**6)
    assert plan.r1 == term_precision(1, 10**6, plan.N)
    c = gmpy2.context(precision=plan.r1 + 40)
    C = c.mul(c.div(c.const_pi(), 6), c.sqrt(24 * 10**6 - 1))
    assert abs(c.sub(plan.C, C)) <= c.mul_2exp(C, -(plan.r1 + 3) + 1)
    with pytest.raises(ValueError):
        choose_plan(127)


def test_magnitude_bound(oracle_small):
    n = 10**6
    vals = [term_magnitude_bound(k, n) for k in range(1, 2000)]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    for n in (1000, 3000):
        assert term_magnitude_bound(1, n) > math.log2(oracle_small[n])
    n = 10**5
    plan = choose_plan(n)
    for k in (1, 2, 3, 7, 20, 100, 160):
        fac = ak_factor(k, n)
        if fac.zero:
            continue
        t = _term_mp(fac, k, n, plan, 80)
        assert term_magnitude_bound(k, n) >= float(gmpy2.log2(abs(t)))


def test_term_precision():
    n = 10**5
    N = choose_terms(n)
    rs = [term_precision(k, n, N) for k in range(1, N + 1)]
    assert min(rs) >= 53
    assert all(a >= b for a, b in zip(rs, rs[1:]))
    v = partition_vector(10**4)[10**4]
    assert term_precision(1, 10**4, choose_terms(10**4)) >= v.bit_length()


@pytest.mark.slow
def test_term_precision_covers_p_1e6():
    v = partition_vector(10**6)[10**6]
    assert term_precision(1, 10**6, choose_terms(10**6)) >= v.bit_length()


def test_eval_U():
    plan = choose_plan(10**6)
    for k in range(2, ROOT_K_MAX):
        r = 400
        a = eval_U(k, plan, r, "root")
        b = eval_U(k, plan, r, "direct")
        # exp amplifies the rounding of x = C/k by a factor x
        x = plan.C_float / k
        assert abs(gmpy2.context(precision=r).sub(a, b)) <= gmpy2.mpfr(2) ** -(r - 4) * (x + 2) * abs(b)
    assert abs(U_double(3.0) - float(mpmath.cosh(3) - mpmath.sinh(3) / 3)) < 1e-14
    xs = [3 + 0.5 * i for i in range(75)]
    us = [U_double(x) for x in xs]
    assert all(u > 0 for u in us) and all(a < b for a, b in zip(us, us[1:]))


def test_small_values(oracle_small):
    assert partition_hrr(6).value == 11
    assert p(0) == 1
    assert partition_hrr(599).value % 125 == 0
    assert partition_hrr(721).value % 121 == 0
    for n in range(0, 3001):
        assert partition_hrr(n).value == oracle_small[n]
    with pytest.raises(ValueError):
        partition_hrr(-1)


def test_paths_agree():
    for n in (128, 1000, 54321, 10**6 + 1):
        ref = partition_hrr(n)
        assert partition_hrr(n, amortized=False).value == ref.value
        assert partition_hrr(n, force_python_tail=True).value == ref.value
    for n in (200, 5000, 40000):
        assert partition_hrr(n, force_mp=True).value == partition_hrr(n).value


def test_deterministic():
    a, b = partition_hrr(123456), partition_hrr(123456)
    assert a == b and a.residual == b.residual


@pytest.mark.slow
def test_asymptotic():
    n = 10**8
    v = partition_hrr(n).value
    ratio = math.log(v) / (math.pi * math.sqrt(2 * n / 3))
    assert abs(ratio - 1) < 0.01
    approx = math.pi * math.sqrt(2 * n / 3) - math.log(4 * n * math.sqrt(3))
    assert abs(math.log(v) - approx) < 1e-3 * approx
