from fractions import Fraction

import gmpy2
import pytest
from helpers import exact
from hypothesis import given, settings
from hypothesis import strategies as st

from rademacher.numctx import (
    MIN_PRECISION,
    DomainError,
    NumericContext,
    RangeError,
    arith,
    const_pi,
    transcend,
)


def test_precision_floor():
    with pytest.raises(ValueError):
        NumericContext(52)
    assert NumericContext(10**4).with_precision(20).precision == MIN_PRECISION


def test_eps_exact():
    assert NumericContext(64).eps == Fraction(1, 2**64)


def test_exact_cases():
    ctx = NumericContext(53)
    assert arith("mul", 1.0, 1.0, ctx=ctx) == 1
    for r in (53, 200, 1000):
        assert arith("sqrt", 4, ctx=NumericContext(r)) == 2
    assert transcend("exp", 0, ctx=ctx) == 1
    assert transcend("cosh", 0, ctx=ctx) == 1


def test_one_third():
    v = arith("div", 1.0, 3.0, ctx=NumericContext(53))
    assert abs(Fraction(float(v)) * 3 - 1) <= Fraction(1, 2**52)
    assert float(v) == 1 / 3


def test_exp1_against_series():
    # e from its Taylor series in exact rationals
    e = sum(Fraction(1, __import__("math").factorial(i)) for i in range(80))
    v = transcend("exp", 1, ctx=NumericContext(200))
    err = abs(exact(v) - e) / e
    assert err <= Fraction(1, 2**198)


def test_errors():
    ctx = NumericContext(53)
    with pytest.raises(DomainError):
        arith("div", 1, 0, ctx=ctx)
    with pytest.raises(DomainError):
        arith("sqrt", -1, ctx=ctx)
    with pytest.raises(DomainError):
        arith("add", gmpy2.inf(), 1, ctx=ctx)
    with pytest.raises(RangeError):
        transcend("exp", gmpy2.mpfr("1e30"), ctx=ctx)
    with pytest.raises(ValueError):
        arith("pow", 1, 2, ctx=ctx)


def test_const_pi():
    assert float(const_pi(NumericContext(53))) == 3.141592653589793
    a = const_pi(NumericContext(100))
    b = const_pi(NumericContext(100))
    assert a == b and a.precision == 100
    # 10 bits is below the floor; round the cached value instead
    ten = gmpy2.context(precision=10).plus(const_pi(NumericContext(64)))
    assert 3.140625 <= ten <= 3.14453125
    ref = gmpy2.context(precision=5000).const_pi()
    hi = const_pi(NumericContext(4000))
    assert abs(exact(hi) - exact(ref)) <= exact(ref) / 2**4000


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(["add", "sub", "mul", "div"]),
    st.fractions(min_value=-1000, max_value=1000, max_denominator=10**6),
    st.fractions(min_value=Fraction(1, 1000), max_value=1000, max_denominator=10**6),
    st.integers(min_value=53, max_value=400),
)
def test_arith_error_bound(op, x, y, r):
    ctx = NumericContext(r)
    xs, ys = ctx.round(x), ctx.round(y)
    want = {"add": lambda a, b: a + b, "sub": lambda a, b: a - b,
             "mul": lambda a, b: a * b, "div": lambda a, b: a / b}[op](exact(xs), exact(ys))
    got = exact(arith(op, xs, ys, ctx=ctx))
    assert abs(got - want) <= abs(want) * ctx.eps


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from(["exp", "sin", "cos", "sinh", "cosh"]),
    st.floats(min_value=-20, max_value=20, allow_nan=False).filter(lambda v: abs(v) > 1e-3),
    st.integers(min_value=53, max_value=300),
)
def test_transcend_against_higher_precision(f, x, r):
    ctx = NumericContext(r)
    got = transcend(f, x, ctx=ctx)
    ref = transcend(f, x, ctx=NumericContext(r + 64))
    assert abs(exact(got) - exact(ref)) <= abs(exact(ref)) * 2 * ctx.eps


def test_monotone_refinement():
    ref = exact(transcend("sin", 7, ctx=NumericContext(1200)))
    errs = [abs(exact(transcend("sin", 7, ctx=NumericContext(r))) - ref) for r in (53, 100, 200, 400, 800)]
    assert errs == sorted(errs, reverse=True)
