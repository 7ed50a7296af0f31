"""Fejer's convexity criterion, endpoint reduction for power differences in
beta, and the comparison lower bound for alternating sine sums."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..interval import DomainError, Interval, cos_sin, ln, pow_, zero
from .monotone import Verdict


def fejer_check(c, seq=None) -> Verdict:
    """Does {c_1, .., c_m, 0} certify [c_1, .., c_m] >= 0 on [0, pi]?

    ``c`` is a list of Intervals, or of ``decompose.Combo`` objects together
    with the sequence ``seq`` they refer to.  Combos are differenced exactly
    before evaluation, so identically vanishing differences give exact zeros.
    Besides the appended-zero convexity the last coefficient must be
    nonnegative (convexity then makes every c_k nonnegative).
    """
    if not c:
        raise ValueError("fejer_check needs a nonempty list")
    if seq is not None:
        from ..decompose import appended_zero_diffs
        diffs = [d.eval(seq) for d in appended_zero_diffs(list(c))]
        last = c[-1].eval(seq)
    else:
        ext = list(c) + [zero(c[0].prec)]
        diffs = [ext[i - 1] - ext[i] * 2 + ext[i + 1] for i in range(1, len(c))]
        last = c[-1]
    checks = diffs + [last]
    if all(v.is_nonnegative() for v in checks):
        return Verdict.PASS
    if any(v.is_negative() for v in checks):
        return Verdict.FAIL
    return Verdict.INCONCLUSIVE


SUP_AT_LOW = "sup-at-low"
SUP_AT_HIGH = "sup-at-high"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class PowerDiffFn:
    """xi(beta) = lam A^beta - (lam + mu) B^beta + mu C^beta.

    Equal bases are merged exactly; a zero base contributes nothing (beta > 0).
    """

    lam: Fraction
    mu: Fraction
    A: Fraction
    B: Fraction
    C: Fraction

    def __post_init__(self):
        for name in ("lam", "mu", "A", "B", "C"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.lam < 0 or self.mu < 0:
            raise ValueError("lambda and mu must be nonnegative")
        if not (0 <= self.C <= self.B <= self.A <= 1):
            raise ValueError(f"need 0 <= C <= B <= A <= 1, got A={self.A}, B={self.B}, C={self.C}")

    def terms(self):
        acc = {}
        for coef, base in ((self.lam, self.A), (-(self.lam + self.mu), self.B), (self.mu, self.C)):
            if base != 0:
                acc[base] = acc.get(base, 0) + coef
        return [(c, b) for b, c in sorted(acc.items(), reverse=True) if c != 0]

    def value(self, beta: Interval) -> Interval:
        out = zero(beta.prec)
        for c, b in self.terms():
            out = out + pow_(Interval(b, prec=beta.prec), beta) * Interval(c, prec=beta.prec)
        return out

    def slope(self, beta: Interval) -> Interval:
        out = zero(beta.prec)
        for c, b in self.terms():
            B = Interval(b, prec=beta.prec)
            out = out + pow_(B, beta) * ln(B) * Interval(c, prec=beta.prec)
        return out


def xi_endpoint_reduce(f: PowerDiffFn, beta_low: Interval) -> str:
    """Which end of [beta_low, 1] carries the supremum of xi."""
    if not f.value(beta_low).is_nonnegative():
        raise ValueError("xi(beta_low) >= 0 is not certified")
    one = Interval(1, prec=beta_low.prec)
    if f.slope(one).is_nonnegative():
        return SUP_AT_HIGH
    if f.slope(beta_low).is_nonpositive():
        return SUP_AT_LOW
    return INCONCLUSIVE


def alt_lower_bound(c1: Interval, c2: Interval, x: Interval) -> Interval:
    """Lower bound for [c_1, .., c_n]^- with positive decreasing c_k."""
    if not c2.is_positive() or not (c1 - c2).is_nonnegative():
        raise ValueError("need c1 >= c2 > 0")
    half = x / 2
    ch, sh = cos_sin(half)
    s3 = cos_sin(half * 3)[1]
    if ch.is_nonpositive() or not ch.is_positive():
        raise DomainError(f"cos(x/2) encloses 0 for x = {x}")
    return (c1 * (sh + s3) - c2 * (1 + s3)) / (ch * 2)


def alt_numerator(c1: Interval, c2: Interval, x: Interval) -> Interval:
    half = x / 2
    sh = cos_sin(half)[1]
    s3 = cos_sin(half * 3)[1]
    return c1 * (sh + s3) - c2 * (1 + s3)
