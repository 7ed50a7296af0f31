from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from ..interval import DEFAULT_PRECISION, DomainError, Interval
from .expr import Expr, parse

INCREASING = "increasing"
DECREASING = "decreasing"


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"

    def __bool__(self):
        return self is Verdict.PASS

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class MonotoneFn:
    """A one-variable expression with a declared direction on [lo, hi]."""

    expr: Expr
    direction: str
    lo: Fraction
    hi: Fraction
    derivative: Expr | None = None

    def __post_init__(self):
        if isinstance(self.expr, str):
            object.__setattr__(self, "expr", parse(self.expr))
        if isinstance(self.derivative, str):
            object.__setattr__(self, "derivative", parse(self.derivative))
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.direction not in (INCREASING, DECREASING):
            raise ValueError(f"direction must be increasing or decreasing, got {self.direction!r}")
        if self.lo >= self.hi:
            raise ValueError(f"empty domain [{self.lo}, {self.hi}]")

    def __call__(self, t, prec: int = DEFAULT_PRECISION) -> Interval:
        x = t if isinstance(t, Interval) else Interval(Fraction(t), prec=prec)
        return self.expr.eval(x, x.prec)

    def domain(self, prec: int = DEFAULT_PRECISION) -> Interval:
        return Interval(self.lo, self.hi, prec=prec)

    def slope(self) -> Expr:
        return self.derivative if self.derivative is not None else self.expr.diff()


def _split(lo: Fraction, hi: Fraction) -> Fraction:
    # geometric midpoint (rounded to a short dyadic) on wide positive ranges
    if lo > 0 and hi / lo > 4:
        g = Fraction(int((lo * hi) ** 0.5 * 2**20), 2**20) if lo * hi < 2**80 else None
        if g is not None and lo < g < hi:
            return g
    return (lo + hi) / 2


def verify_monotone(f: MonotoneFn, max_depth: int = 12, prec: int = DEFAULT_PRECISION) -> Verdict:
    """Certify the declared direction by bounding f' on an adaptive subdivision."""
    d = f.slope()
    want_up = f.direction == INCREASING
    stack = [(f.lo, f.hi, 0)]
    undecided = False
    while stack:
        lo, hi, depth = stack.pop()
        try:
            v = d.eval(Interval(lo, hi, prec=prec), prec)
            ok = v.is_nonnegative() if want_up else v.is_nonpositive()
            wrong = v.is_negative() if want_up else v.is_positive()
        except DomainError:
            ok = wrong = False
        if ok:
            continue
        if wrong:
            return Verdict.FAIL
        if depth >= max_depth:
            undecided = True
            continue
        mid = _split(lo, hi)
        stack.append((mid, hi, depth + 1))
        stack.append((lo, mid, depth + 1))
    return Verdict.INCONCLUSIVE if undecided else Verdict.PASS
