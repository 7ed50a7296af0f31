from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sinecert import interval as I
from sinecert.interval import DomainError, Interval, beta1, beta2, exact_decimal, ulp

F = Fraction


def test_add_exact():
    r = Interval(1, 2) + Interval(3, 4)
    assert r.lo_fraction == 4 and r.hi_fraction == 6


def test_mul_sign_cases():
    r = Interval(-1, 1) * Interval(-1, 1)
    assert r.lo_fraction == -1 and r.hi_fraction == 1


def test_div_third_tight():
    r = Interval(1) / Interval(3)
    assert r.contains(F(1, 3))
    assert r.hi_fraction - r.lo_fraction <= 2 * ulp(F(1, 3), 128)


def test_div_by_zero_interval_raises():
    with pytest.raises(DomainError):
        Interval(1) / Interval(-1, 1)
    with pytest.raises(DomainError):
        Interval(1) / Interval(0)


def test_domain_errors():
    with pytest.raises(DomainError):
        I.ln(Interval(-1, 1))
    with pytest.raises(DomainError):
        I.sqrt(Interval(-2, -1))
    with pytest.raises(DomainError):
        I.pow_(Interval(0, 1), Interval(F(1, 2)))


def test_empty_interval_rejected():
    with pytest.raises(ValueError):
        Interval(2, 1)


def test_precision_floor():
    with pytest.raises(ValueError):
        Interval(1, prec=20)


def test_sin_zero_exact():
    r = I.sin(Interval(0))
    assert r.lo_fraction == 0 and r.hi_fraction == 0


def test_cos_full_period():
    r = I.cos(Interval(0).hull(I.pi() * 2))
    assert r.contains(Interval(-1, 1))


def test_ln2_tight():
    r = I.ln(Interval(2))
    with mpmath.workprec(400):
        v = mpmath.log(2)
    assert r.lo <= v <= r.hi
    assert r.hi_fraction - r.lo_fraction <= 4 * ulp(F("0.693"), 128)


def test_pow_one_base():
    assert I.pow_(Interval(1), Interval(F(7, 3))).contains(1)
    assert I.pow_(Interval(1), Interval(-5, 5)).contains(1)


def test_pow_5_16_beta1_is_half():
    assert I.pow_(Interval(F(5, 16)), beta1()).contains(F(1, 2))


def test_pow_beta2_relation():
    # (13/288)^b2 = (1/2) (1/10)^b2 at the full-convexity threshold
    b = Interval(F("0.8714162659") - F(1, 10**9), F("0.8714162659") + F(1, 10**9))
    lhs = I.pow_(Interval(F(13, 288)), b)
    rhs = I.pow_(Interval(F(1, 10)), b) / 2
    assert lhs.overlaps(rhs)


def test_named_exponents():
    with mpmath.workprec(400):
        v1 = mpmath.log(2) / mpmath.log(mpmath.mpf(16) / 5)
        v2 = mpmath.log(2) / (mpmath.log(288) - mpmath.log(130))
    assert beta1().lo <= v1 <= beta1().hi
    assert beta2().lo <= v2 <= beta2().hi
    assert abs(beta1().mid() - F("0.59592")) < F(1, 10**5)
    assert abs(beta2().mid() - F("0.8714162659")) < F(1, 10**9)


def test_beta1_width_scales_with_precision():
    for p in (64, 128, 256):
        w1 = beta1(p).width()
        w2 = beta1(2 * p).width()
        assert w2 <= w1 / 2


def test_with_prec_outward():
    x = Interval(F(1, 3), prec=256)
    y = x.with_prec(53)
    assert y.contains(x)


def test_hull_intersect():
    a, b = Interval(0, 2), Interval(1, 3)
    assert a.hull(b) == Interval(0, 3)
    assert a.intersect(b) == Interval(1, 2)
    with pytest.raises(ValueError):
        Interval(0, 1).intersect(Interval(2, 3))


def test_predicates():
    assert Interval(1, 2).is_positive()
    assert Interval(0, 2).is_nonnegative() and not Interval(0, 2).is_positive()
    assert Interval(-2, -1).is_negative()
    assert Interval(1, 2).certainly_lt(3) and not Interval(1, 3).certainly_lt(3)
    assert Interval(1, 3).certainly_le(3)
    assert Interval(F(1, 2)).is_exact()


def test_abs_straddle():
    r = abs(Interval(-3, 2))
    assert r.lo_fraction == 0 and r.hi_fraction == 3


def test_fmt_is_outward():
    x = Interval(F(1, 3))
    s = x.fmt(5)
    lo, hi = (F(t) for t in s.strip("[]").split(", "))
    assert lo <= F(1, 3) <= hi


def test_exact_decimal_roundtrip():
    x = Interval(F(1, 3), prec=64)
    assert F(exact_decimal(x.raw[0])) == x.lo_fraction


def test_mid_and_float():
    x = Interval(1, 3)
    assert x.mid() == 2
    assert float(x) == 2.0
    assert x.lo_float() == 1.0 and x.hi_float() == 3.0


def test_directed_float_bounds():
    x = Interval(F(1, 3), prec=128)
    assert F(x.lo_float()) <= x.lo_fraction
    assert F(x.hi_float()) >= x.hi_fraction


_frac = st.fractions(min_value=-100, max_value=100, max_denominator=10**6)


@settings(max_examples=300, deadline=None)
@given(_frac, _frac, _frac, _frac, st.sampled_from(["add", "sub", "mul", "div"]))
def test_rational_ops_contain_exact(a, b, c, d, op):
    x = Interval(min(a, b), max(a, b), prec=64)
    y = Interval(min(c, d), max(c, d), prec=64)
    p, q = x.lo_fraction, y.hi_fraction
    if op == "div" and y.contains(0):
        return
    r = {"add": x + y, "sub": x - y, "mul": x * y, "div": x / y if op == "div" else None}[op]
    exact = {"add": p + q, "sub": p - q, "mul": p * q, "div": p / q if op == "div" else None}[op]
    assert r.contains(exact)


@settings(max_examples=200, deadline=None)
@given(st.fractions(min_value=F(1, 1000), max_value=50, max_denominator=10**4),
       st.fractions(min_value=-3, max_value=3, max_denominator=100))
def test_pow_contains_mpmath(a, b):
    r = I.pow_(Interval(a, prec=96), Interval(b, prec=96))
    with mpmath.workprec(300):
        v = mpmath.power(mpmath.mpf(a.numerator) / a.denominator, mpmath.mpf(b.numerator) / b.denominator)
        tol = abs(v) * mpmath.mpf(2) ** -280
        assert r.lo <= v + tol and v - tol <= r.hi
