"""Exact rational polynomials and Sturm root counting."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional


class RationalPolynomial:
    """Polynomial with exact Fraction coefficients, lowest degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = (0,)):
        c = [Fraction(v) for v in coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        self.c = tuple(c) if c else (Fraction(0),)

    @classmethod
    def x(cls) -> "RationalPolynomial":
        return cls([0, 1])

    @classmethod
    def const(cls, v) -> "RationalPolynomial":
        return cls([v])

    @property
    def degree(self) -> int:
        return -1 if self.is_zero() else len(self.c) - 1

    @property
    def lead(self) -> Fraction:
        return self.c[-1]

    def is_zero(self) -> bool:
        return len(self.c) == 1 and self.c[0] == 0

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        acc = Fraction(0)
        for v in reversed(self.c):
            acc = acc * t + v
        return acc

    def _coerce(self, o):
        return o if isinstance(o, RationalPolynomial) else RationalPolynomial([o])

    def __add__(self, o):
        o = self._coerce(o)
        n = max(len(self.c), len(o.c))
        return RationalPolynomial([(self.c[i] if i < len(self.c) else 0) + (o.c[i] if i < len(o.c) else 0)
                                   for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial([-v for v in self.c])

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        o = self._coerce(o)
        out = [Fraction(0)] * (len(self.c) + len(o.c) - 1)
        for i, u in enumerate(self.c):
            if u:
                for j, v in enumerate(o.c):
                    out[i + j] += u * v
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = RationalPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, o):
        o = self._coerce(o)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        q = [Fraction(0)] * max(1, len(rem) - len(o.c) + 1)
        while len(rem) >= len(o.c) and any(rem):
            shift = len(rem) - len(o.c)
            f = rem[-1] / o.lead
            q[shift] = f
            for i, v in enumerate(o.c):
                rem[i + shift] -= f * v
            rem.pop()
        return RationalPolynomial(q), RationalPolynomial(rem or [0])

    def __truediv__(self, o):
        return RationalPolynomial([v / Fraction(o) for v in self.c])

    def __floordiv__(self, o):
        return divmod(self, o)[0]

    def __mod__(self, o):
        return divmod(self, o)[1]

    def __eq__(self, o):
        return isinstance(o, RationalPolynomial) and self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial([i * v for i, v in enumerate(self.c)][1:] or [0])

    def compose(self, other: "RationalPolynomial") -> "RationalPolynomial":
        acc = RationalPolynomial([0])
        for v in reversed(self.c):
            acc = acc * other + v
        return acc

    def sign_at_infinity(self, positive: bool = True) -> int:
        if self.is_zero():
            return 0
        s = 1 if self.lead > 0 else -1
        if not positive and self.degree % 2 == 1:
            s = -s
        return s

    def __str__(self):
        terms = []
        for i in range(len(self.c) - 1, -1, -1):
            v = self.c[i]
            if v == 0 and len(self.c) > 1:
                continue
            mag = abs(v)
            coef = "" if (mag == 1 and i > 0) else (str(mag) if mag.denominator == 1 else f"({mag})")
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            sep = "*" if coef and mono else ""
            terms.append(("-" if v < 0 else "+") + coef + sep + mono)
        s = " ".join(terms)
        return s[1:] if s.startswith("+") else s

    def __repr__(self):
        return f"RationalPolynomial({self})"


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def sturm_chain(p: RationalPolynomial) -> list:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append(-r)
    return chain


def _variations(signs) -> int:
    s = [v for v in signs if v != 0]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def _signs_at(chain, t: Optional[Fraction], upper: bool):
    if t is None:
        return [q.sign_at_infinity(upper) for q in chain]
    return [_sign(q(t)) for q in chain]


def _deflate(p: RationalPolynomial, t: Fraction) -> RationalPolynomial:
    lin = RationalPolynomial([-t, 1])
    while p.degree > 0 and p(t) == 0:
        p = p // lin
    return p


def sturm_count(p: RationalPolynomial, lo=None, hi=None) -> int:
    """Distinct real roots of ``p`` in the open interval (lo, hi).

    ``None`` stands for an infinite endpoint.  Roots sitting exactly on a
    rational endpoint are divided out first, so endpoints never need to be
    perturbed.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root count")
    lo = None if lo is None else Fraction(lo)
    hi = None if hi is None else Fraction(hi)
    if lo is not None and hi is not None and lo >= hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    if lo is not None:
        p = _deflate(p, lo)
    if hi is not None:
        p = _deflate(p, hi)
    if p.degree <= 0:
        return 0
    chain = sturm_chain(p)
    return _variations(_signs_at(chain, lo, False)) - _variations(_signs_at(chain, hi, True))


def _sample(lo, hi) -> Fraction:
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return Fraction(hi) - 1
    if hi is None:
        return Fraction(lo) + 1
    return (Fraction(lo) + Fraction(hi)) / 2


@dataclass(frozen=True)
class SturmResult:
    polynomial: str
    lo: Optional[Fraction]
    hi: Optional[Fraction]
    roots: int
    sample: Fraction
    sample_value: Fraction
    passed: bool
    label: str = ""

    def __bool__(self):
        return self.passed

    def describe(self) -> str:
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "+inf" if self.hi is None else str(self.hi)
        verdict = "pass" if self.passed else "fail"
        return f"{self.polynomial} on ({lo}, {hi}): {self.roots} roots, sign at {self.sample} is " \
               f"{'+' if self.sample_value > 0 else ('-' if self.sample_value < 0 else '0')} -> {verdict}"


def sturm_positive(p: RationalPolynomial, lo=None, hi=None, label: str = "") -> SturmResult:
    """p > 0 on (lo, hi): no roots there and positive at a rational sample."""
    roots = sturm_count(p, lo, hi)
    t = _sample(lo, hi)
    v = p(t)
    return SturmResult(str(p), None if lo is None else Fraction(lo), None if hi is None else Fraction(hi),
                       roots, t, v, roots == 0 and v > 0, label)
