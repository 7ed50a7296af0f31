"""Outward-rounded real intervals over mpmath's raw interval kernels.

Every value is an immutable pair of binary floating point endpoints carrying
its own precision.  The kernels in ``mpmath.libmp.libmpi`` take the precision
as an explicit argument and keep no global state, so nothing here depends on
``mpmath.mp`` settings and all operations are thread safe.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import mpmath
from mpmath.libmp import (
    fzero,
    from_int,
    from_rational as _mpf_from_rational,
    from_str,
    mpf_cmp,
    mpf_le,
    mpf_lt,
    mpf_neg,
    mpf_sub,
    mpf_abs,
    mpf_pos,
    round_ceiling,
    round_floor,
    to_float,
    to_rational,
    finf,
    fninf,
)
from mpmath.libmp import libmpi

DEFAULT_PRECISION = 128


def mpf_max(a, b):
    return b if mpf_lt(a, b) else a


def mpf_min(a, b):
    return a if mpf_lt(a, b) else b
MIN_PRECISION = 53


class DomainError(ValueError):
    """An operation was asked to leave its real domain."""


def _check_prec(prec: int) -> int:
    if not isinstance(prec, int) or prec < MIN_PRECISION:
        raise ValueError(f"precision must be an integer >= {MIN_PRECISION}, got {prec!r}")
    return prec


def _raw_bounds(value, prec: int):
    """Raw (lo, hi) mpf tuples enclosing an exact number."""
    if isinstance(value, bool):
        value = int(value)
    if isinstance(value, int):
        return (from_int(value, prec, round_floor), from_int(value, prec, round_ceiling))
    if isinstance(value, Rational):
        p, q = value.numerator, value.denominator
        return (_mpf_from_rational(p, q, prec, round_floor), _mpf_from_rational(p, q, prec, round_ceiling))
    if isinstance(value, str):
        return (from_str(value, prec, round_floor), from_str(value, prec, round_ceiling))
    if isinstance(value, float):
        f = Fraction(value)
        return _raw_bounds(f, prec)
    if isinstance(value, mpmath.mpf):
        v = value._mpf_
        return (mpf_pos(v, prec, round_floor), mpf_pos(v, prec, round_ceiling))
    raise TypeError(f"cannot build an interval from {type(value).__name__}")


def raw_to_fraction(v) -> Fraction:
    p, q = to_rational(v)
    return Fraction(int(p), int(q))


class Interval:
    """Closed interval [lo, hi] with binary endpoints at ``prec`` bits."""

    __slots__ = ("_lo", "_hi", "prec")

    def __init__(self, lo, hi=None, prec: int = DEFAULT_PRECISION):
        _check_prec(prec)
        a = _raw_bounds(lo, prec)[0]
        b = _raw_bounds(lo if hi is None else hi, prec)[1]
        if mpf_lt(b, a):
            raise ValueError(f"empty interval: lo={lo!r} > hi={hi!r}")
        self._lo = a
        self._hi = b
        self.prec = prec

    @classmethod
    def _raw(cls, lo, hi, prec: int) -> "Interval":
        obj = cls.__new__(cls)
        obj._lo = lo
        obj._hi = hi
        obj.prec = prec
        return obj

    @classmethod
    def from_pair(cls, pair, prec: int) -> "Interval":
        return cls._raw(pair[0], pair[1], prec)

    # -- endpoint access ---------------------------------------------------

    @property
    def lo(self) -> mpmath.mpf:
        # make_mpf wraps the raw value without rounding to the global context
        return mpmath.mp.make_mpf(self._lo)

    @property
    def hi(self) -> mpmath.mpf:
        return mpmath.mp.make_mpf(self._hi)

    @property
    def raw(self):
        return (self._lo, self._hi)

    @property
    def lo_fraction(self) -> Fraction:
        return raw_to_fraction(self._lo)

    @property
    def hi_fraction(self) -> Fraction:
        return raw_to_fraction(self._hi)

    def lo_float(self) -> float:
        """Largest double not above ``lo``."""
        return to_float(self._lo, rnd=round_floor)

    def hi_float(self) -> float:
        return to_float(self._hi, rnd=round_ceiling)

    def width(self) -> mpmath.mpf:
        return mpmath.mp.make_mpf(mpf_sub(self._hi, self._lo, self.prec, round_ceiling))

    def mid(self) -> Fraction:
        return (self.lo_fraction + self.hi_fraction) / 2

    def mag(self) -> mpmath.mpf:
        return mpmath.mp.make_mpf(mpf_max(mpf_abs(self._lo), mpf_abs(self._hi)))

    # -- predicates --------------------------------------------------------

    def contains(self, value) -> bool:
        if isinstance(value, Interval):
            return mpf_le(self._lo, value._lo) and mpf_le(value._hi, self._hi)
        f = _as_fraction(value)
        return self.lo_fraction <= f <= self.hi_fraction

    __contains__ = contains

    def is_positive(self) -> bool:
        return mpf_lt(fzero, self._lo)

    def is_nonnegative(self) -> bool:
        return mpf_le(fzero, self._lo)

    def is_negative(self) -> bool:
        return mpf_lt(self._hi, fzero)

    def is_nonpositive(self) -> bool:
        return mpf_le(self._hi, fzero)

    def is_exact(self) -> bool:
        return self._lo == self._hi

    def certainly_lt(self, other) -> bool:
        other = self._coerce(other)
        return mpf_lt(self._hi, other._lo)

    def certainly_le(self, other) -> bool:
        other = self._coerce(other)
        return mpf_le(self._hi, other._lo)

    def certainly_gt(self, other) -> bool:
        return self._coerce(other).certainly_lt(self)

    def certainly_ge(self, other) -> bool:
        return self._coerce(other).certainly_le(self)

    def overlaps(self, other: "Interval") -> bool:
        return mpf_le(self._lo, other._hi) and mpf_le(other._lo, self._hi)

    def __eq__(self, other):
        if not isinstance(other, Interval):
            return NotImplemented
        return self._lo == other._lo and self._hi == other._hi

    def __hash__(self):
        return hash((self._lo, self._hi))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Interval":
        if isinstance(other, Interval):
            return other
        return Interval(other, prec=self.prec)

    def _prec2(self, other: "Interval") -> int:
        return max(self.prec, other.prec)

    def __add__(self, other):
        other = self._coerce(other)
        p = self._prec2(other)
        return Interval.from_pair(libmpi.mpi_add(self.raw, other.raw, p), p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        p = self._prec2(other)
        return Interval.from_pair(libmpi.mpi_sub(self.raw, other.raw, p), p)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        p = self._prec2(other)
        return Interval.from_pair(libmpi.mpi_mul(self.raw, other.raw, p), p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if mpf_le(other._lo, fzero) and mpf_le(fzero, other._hi):
            raise DomainError(f"division by an interval containing 0: {other!r}")
        p = self._prec2(other)
        return Interval.from_pair(libmpi.mpi_div(self.raw, other.raw, p), p)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __neg__(self):
        return Interval._raw(mpf_neg(self._hi), mpf_neg(self._lo), self.prec)

    def __pos__(self):
        return self

    def __abs__(self):
        if self.is_nonnegative():
            return self
        if self.is_nonpositive():
            return -self
        return Interval._raw(fzero, mpf_max(mpf_neg(self._lo), self._hi), self.prec)

    def __pow__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            if other < 0:
                return Interval(1, prec=self.prec) / (self ** (-other))
            return Interval.from_pair(libmpi.mpi_pow_int(self.raw, other, self.prec), self.prec)
        return pow_(self, self._coerce(other))

    def __rpow__(self, other):
        return pow_(self._coerce(other), self)

    # -- lattice -----------------------------------------------------------

    def hull(self, other: "Interval") -> "Interval":
        p = self._prec2(other)
        return Interval._raw(mpf_min(self._lo, other._lo), mpf_max(self._hi, other._hi), p)

    def intersect(self, other: "Interval") -> "Interval":
        lo = mpf_max(self._lo, other._lo)
        hi = mpf_min(self._hi, other._hi)
        if mpf_lt(hi, lo):
            raise ValueError("empty intersection")
        return Interval._raw(lo, hi, self._prec2(other))

    def with_prec(self, prec: int) -> "Interval":
        """Same endpoints, rounded outward if ``prec`` is smaller."""
        _check_prec(prec)
        lo = mpf_pos(self._lo, prec, round_floor)
        hi = mpf_pos(self._hi, prec, round_ceiling)
        return Interval._raw(lo, hi, prec)

    # -- display -----------------------------------------------------------

    def fmt(self, digits: int = 17) -> str:
        """Outward decimal rendering with ``digits`` significant digits."""
        return f"[{_dec_out(self._lo, digits, round_floor)}, {_dec_out(self._hi, digits, round_ceiling)}]"

    def __repr__(self):
        return f"Interval{self.fmt(20)}"

    def __str__(self):
        return self.fmt(17)

    def __float__(self):
        return to_float(mpmath.libmp.mpf_shift(mpmath.libmp.mpf_add(self._lo, self._hi, self.prec + 1), -1))


def _as_fraction(value) -> Fraction:
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, mpmath.mpf):
        return raw_to_fraction(value._mpf_)
    return Fraction(value)


def _dec_out(v, digits: int, rnd) -> str:
    """Decimal string of raw mpf ``v`` rounded in direction ``rnd``."""
    if v in (finf, fninf):
        return "inf" if v == finf else "-inf"
    if v == fzero:
        return "0"
    f = raw_to_fraction(v)
    a = abs(f)
    e = 0
    while a >= 10:
        a /= 10
        e += 1
    while a < 1:
        a *= 10
        e -= 1
    scaled = f * Fraction(10) ** (digits - 1 - e)
    n = scaled.numerator // scaled.denominator
    if rnd == round_ceiling and n != scaled:
        n += 1
    s = str(abs(n)).rjust(digits, "0")
    exp10 = e - (digits - 1)
    body = _place_point(s, exp10)
    return ("-" if n < 0 else "") + body


def _place_point(s: str, exp10: int) -> str:
    """Render integer digit string ``s`` times 10**exp10."""
    if -25 <= exp10 + len(s) <= 25:
        if exp10 >= 0:
            return s + "0" * exp10
        point = len(s) + exp10
        if point > 0:
            out = s[:point] + "." + s[point:]
        else:
            out = "0." + "0" * (-point) + s
        return out.rstrip("0").rstrip(".") if "." in out else out
    mant = s[0] + ("." + s[1:].rstrip("0") if s[1:].rstrip("0") else "")
    return f"{mant}e{exp10 + len(s) - 1}"


def exact_decimal(v) -> str:
    """Exact decimal expansion of a dyadic raw mpf, for bit-exact round trips."""
    f = raw_to_fraction(v)
    if f == 0:
        return "0"
    sign = "-" if f < 0 else ""
    f = abs(f)
    k = 0
    den = f.denominator
    while den > 1:
        den //= 2
        k += 1
    scaled = f.numerator * 5 ** k
    s = str(scaled)
    if k == 0:
        return sign + s
    s = s.rjust(k + 1, "0")
    return sign + s[:-k] + "." + s[-k:]


# -- constructors ------------------------------------------------------------

def point(value, prec: int = DEFAULT_PRECISION) -> Interval:
    """Tightest enclosure of an exact number (int, Fraction or decimal string)."""
    return Interval(value, prec=prec)


def from_rational(p: int, q: int = 1, prec: int = DEFAULT_PRECISION) -> Interval:
    return Interval(Fraction(p, q), prec=prec)


def zero(prec: int = DEFAULT_PRECISION) -> Interval:
    return Interval._raw(fzero, fzero, prec)


def one(prec: int = DEFAULT_PRECISION) -> Interval:
    return Interval(1, prec=prec)


def pi(prec: int = DEFAULT_PRECISION) -> Interval:
    return Interval.from_pair(libmpi.mpi_pi(prec), prec)


# -- elementary functions ----------------------------------------------------

def ln(a: Interval) -> Interval:
    if not a.is_positive():
        raise DomainError(f"ln needs a positive argument, got {a!r}")
    return Interval.from_pair(libmpi.mpi_log(a.raw, a.prec), a.prec)


def exp(a: Interval) -> Interval:
    return Interval.from_pair(libmpi.mpi_exp(a.raw, a.prec), a.prec)


def sqrt(a: Interval) -> Interval:
    if not a.is_nonnegative():
        raise DomainError(f"sqrt needs a nonnegative argument, got {a!r}")
    return Interval.from_pair(libmpi.mpi_sqrt(a.raw, a.prec), a.prec)


def cos_sin(a: Interval):
    c, s = libmpi.mpi_cos_sin(a.raw, a.prec)
    return Interval.from_pair(c, a.prec), Interval.from_pair(s, a.prec)


def sin(a: Interval) -> Interval:
    return cos_sin(a)[1]


def cos(a: Interval) -> Interval:
    return cos_sin(a)[0]


def pow_(a: Interval, beta: Interval) -> Interval:
    """Enclosure of a**beta as exp(beta ln a); requires a > 0."""
    if not isinstance(beta, Interval):
        beta = Interval(beta, prec=a.prec)
    if not a.is_positive():
        raise DomainError(f"pow needs a positive base, got {a!r}")
    if a._lo == a._hi and mpf_cmp(a._lo, from_int(1)) == 0:
        return one(max(a.prec, beta.prec))
    return exp(beta * ln(a.with_prec(max(a.prec, beta.prec))))


# -- named exponents -----------------------------------------------------------

@lru_cache(maxsize=None)
def beta1(prec: int = DEFAULT_PRECISION) -> Interval:
    """log 2 / log(16/5), the sharp exponent."""
    p = prec + 10
    val = ln(Interval(2, prec=p)) / ln(Interval(Fraction(16, 5), prec=p))
    return val.with_prec(prec)


@lru_cache(maxsize=None)
def beta2(prec: int = DEFAULT_PRECISION) -> Interval:
    """ln 2 / (ln 288 - ln 130), where n = 7 becomes fully convex."""
    p = prec + 10
    val = ln(Interval(2, prec=p)) / (ln(Interval(288, prec=p)) - ln(Interval(130, prec=p)))
    return val.with_prec(prec)


def ulp(x, prec: int) -> Fraction:
    """Unit in the last place of the nonzero number ``x`` at ``prec`` bits."""
    f = abs(_as_fraction(x))
    e = 0
    while f >= 2:
        f /= 2
        e += 1
    while f < 1:
        f *= 2
        e -= 1
    return Fraction(2) ** (e - prec + 1)
