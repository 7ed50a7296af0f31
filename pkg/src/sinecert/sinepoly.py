"""Coefficients a_{n,k}, the sine sums S and S^-, the partial sums tau_k and
the second differences of the coefficient sequence."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .interval import DEFAULT_PRECISION, Interval, cos_sin, pow_, zero, one

# closed forms are abandoned once the denominator enclosure dips below this
POLE_GUARD = Fraction(1, 2**20)
RECURRENCE_WIDTH = 2.0 ** -60


def coeff_base(n: int, k: int) -> Fraction:
    """(n^2 - k^2) / ((n^2 - 1) k), the number raised to beta."""
    _check_nk(n, k)
    return Fraction(n * n - k * k, (n * n - 1) * k)


def _check_nk(n: int, k: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k}")


def coeff(n: int, k: int, beta: Interval) -> Interval:
    _check_nk(n, k)
    if k == n:
        return zero(beta.prec)
    if k == 1:
        return one(beta.prec)
    return pow_(Interval(coeff_base(n, k), prec=beta.prec), beta)


@dataclass(frozen=True)
class CoefficientSequence:
    """a_1 .. a_n for fixed (n, beta); indexing is 1-based, ``seq[k]``."""

    n: int
    beta: Interval
    a: tuple
    # rebuilds beta at a higher precision; used when a sign is undecidable
    beta_source: Callable[[int], Interval] | None = field(default=None, compare=False, repr=False)

    @classmethod
    def build(cls, n: int, beta: Interval, beta_source=None) -> "CoefficientSequence":
        if n < 2:
            raise ValueError(f"n must be >= 2, got {n}")
        return cls(n, beta, tuple(coeff(n, k, beta) for k in range(1, n + 1)), beta_source)

    @property
    def prec(self) -> int:
        return self.beta.prec

    def __getitem__(self, k: int) -> Interval:
        if not 1 <= k <= self.n:
            raise IndexError(f"coefficient index {k} outside 1..{self.n}")
        return self.a[k - 1]

    def refined(self, prec: int) -> "CoefficientSequence | None":
        """Same sequence recomputed at ``prec`` bits, if beta can be rebuilt."""
        if self.beta_source is None:
            return None
        return CoefficientSequence.build(self.n, self.beta_source(prec), self.beta_source)

    def d(self, k: int) -> Interval:
        return self[k] - self[k + 1]

    def second_diff(self, k: int) -> Interval:
        return second_diff(self, k)

    def delta(self, k: int) -> Interval:
        return delta(self, k)

    def values(self) -> list:
        return list(self.a[:-1])


@dataclass(frozen=True)
class SinePolyValue:
    value: Interval
    x: Interval


@dataclass(frozen=True)
class TauValue:
    value: Interval
    form: str          # form actually used
    fallback: bool = False


def _as_interval(x, prec: int) -> Interval:
    return x if isinstance(x, Interval) else Interval(x, prec=prec)


def sine_table(x: Interval, m: int):
    """sin(kx) for k = 1..m as a list (index 0 is k = 1)."""
    c, s = cos_sin(x)
    out = [s]
    if m < 2:
        return out[:m]
    # angle addition is cheap but only tight for (nearly) point arguments
    narrow = x.width() < RECURRENCE_WIDTH
    sk, ck = s, c
    for k in range(2, m + 1):
        if not narrow or k % 16 == 0:
            ck, sk = cos_sin(x * k)
        else:
            sk, ck = sk * c + ck * s, ck * c - sk * s
        out.append(sk)
    return out


def sine_sum(coeffs: Sequence[Interval], x: Interval, alternating: bool = False) -> Interval:
    """sum_k (+-)^{k+1} c_k sin(kx) for k = 1..len(coeffs)."""
    prec = max([x.prec] + [c.prec for c in coeffs]) if coeffs else x.prec
    total = zero(prec)
    if not coeffs:
        return total
    table = sine_table(x, len(coeffs))
    for k, (c, s) in enumerate(zip(coeffs, table), start=1):
        term = c * s
        total = total - term if (alternating and k % 2 == 0) else total + term
    return total


def eval_S(n, beta: Interval | None = None, x=None, alternating: bool = False) -> SinePolyValue:
    """S_n(x) (or S_n^- with ``alternating``).  ``n`` may be a prebuilt sequence."""
    seq = n if isinstance(n, CoefficientSequence) else CoefficientSequence.build(n, beta)
    x = _as_interval(x, seq.prec)
    return SinePolyValue(sine_sum(seq.values(), x, alternating), x)


def tau(k: int, x, alternating: bool = False, form: str = "closed",
        prec: int = DEFAULT_PRECISION) -> TauValue:
    """Partial sum sum_{j<=k} (+-)^{j+1} sin(jx)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if form not in ("closed", "direct"):
        raise ValueError(f"unknown form {form!r}")
    x = _as_interval(x, prec)
    if form == "closed":
        half = x / 2
        ch, sh = cos_sin(half)
        den = ch if alternating else sh
        if den.lo_fraction >= POLE_GUARD:
            return TauValue(_tau_closed(k, x, half, ch, sh, alternating), "closed")
        return TauValue(_tau_direct(k, x, alternating), "direct", fallback=True)
    return TauValue(_tau_direct(k, x, alternating), "direct")


def _tau_direct(k: int, x: Interval, alternating: bool) -> Interval:
    return sine_sum([one(x.prec)] * k, x, alternating)


def _tau_closed(k, x, half, ch, sh, alternating) -> Interval:
    # cos(x/2) - cos((k+1/2)x) over 2 sin(x/2), and the reflected version
    c_top, s_top = cos_sin(x * k + half)
    if not alternating:
        return (ch - c_top) / (sh * 2)
    sign = -1 if k % 2 == 0 else 1
    return (sh + s_top * sign) / (ch * 2)


def second_diff(seq: CoefficientSequence, k: int) -> Interval:
    if not 2 <= k <= seq.n - 1:
        raise ValueError(f"second difference index {k} outside 2..{seq.n - 1}")
    return seq[k - 1] - seq[k] * 2 + seq[k + 1]


def delta(seq: CoefficientSequence, k: int) -> Interval:
    if not 1 <= k <= seq.n - 2:
        raise ValueError(f"delta index {k} outside 1..{seq.n - 2}")
    return -second_diff(seq, seq.n - k)


def delta1_closed(n: int, beta: Interval) -> Interval:
    """delta_1 through its factored form

    ((2n-1)/((n^2-1)(n-1)))^beta [2 - (4(n-1)^2 / ((2n-1)(n-2)))^beta].
    """
    if n < 3:
        raise ValueError("delta_1 needs n >= 3")
    p = beta.prec
    f = pow_(Interval(Fraction(2 * n - 1, (n * n - 1) * (n - 1)), prec=p), beta)
    r = pow_(Interval(Fraction(4 * (n - 1) ** 2, (2 * n - 1) * (n - 2)), prec=p), beta)
    return f * (2 - r)


def theta(n: int, beta: Interval) -> Interval:
    """(n-1) delta_1 written through the closed form."""
    return delta1_closed(n, beta) * (n - 1)
