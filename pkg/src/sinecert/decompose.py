"""Convex/concave split of the coefficient sequence and the parts
S = H + K + T, with T = sum_{k=m}^{n-1} d_k tau_k."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .interval import Interval, beta1, pow_, sqrt, ulp, zero
from .sinepoly import CoefficientSequence, sine_sum, tau

FULLY_CONVEX = "fully convex"
ESCALATION = (1, 2, 4)


class SplitError(ArithmeticError):
    """No admissible split could be certified; ``k`` names the culprit."""

    def __init__(self, k: int, message: str):
        super().__init__(message)
        self.k = k


class StructureError(ValueError):
    pass


class Combo:
    """Integer combination sum_j w_j a_j of the coefficients.

    Keeping the weights exact lets identities such as a vanishing second
    difference evaluate to an exact zero instead of a tiny straddling interval.
    """

    __slots__ = ("w",)

    def __init__(self, weights=None):
        self.w = {j: c for j, c in (weights or {}).items() if c != 0}

    @classmethod
    def a(cls, j: int) -> "Combo":
        return cls({j: 1})

    def __add__(self, other: "Combo") -> "Combo":
        w = dict(self.w)
        for j, c in other.w.items():
            w[j] = w.get(j, 0) + c
        return Combo(w)

    def __sub__(self, other: "Combo") -> "Combo":
        return self + other * -1

    def __mul__(self, c: int) -> "Combo":
        return Combo({j: v * c for j, v in self.w.items()})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.w

    def eval(self, seq: CoefficientSequence) -> Interval:
        total = zero(seq.prec)
        for j in sorted(self.w):
            c = self.w[j]
            # a_n is an exact zero; skip it so exactness survives
            if j == seq.n:
                continue
            total = total + seq[j] * c
        return total

    def __eq__(self, other):
        return isinstance(other, Combo) and self.w == other.w

    def __repr__(self):
        if not self.w:
            return "0"
        parts = []
        for j in sorted(self.w):
            c = self.w[j]
            coef = "" if abs(c) == 1 else str(abs(c))
            parts.append(("-" if c < 0 else "+") + f"{coef}a{j}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


def second_diff_combo(k: int) -> Combo:
    return Combo({k - 1: 1, k: -2, k + 1: 1})


def appended_zero_diffs(combos: list) -> list:
    """Second differences of {c_1, .., c_m, 0} as combos (indices 2..m)."""
    seq = list(combos) + [Combo()]
    return [seq[i - 1] - seq[i] * 2 + seq[i + 1] for i in range(1, len(combos))]


def h_combos() -> list:
    a = Combo.a
    return [a(1) - 4 * a(4) + 3 * a(5), a(2) - 3 * a(4) + 2 * a(5), a(3) - 2 * a(4) + a(5)]


def k_combos(m: int) -> list:
    """Coefficients of K = S_1 - H where S_1 = [a_k - a_m, k < m]."""
    if m < 5:
        raise StructureError(f"split index m = {m} leaves fewer than five head terms")
    a = Combo.a
    s1 = [a(k) - a(m) for k in range(1, m)]
    h = h_combos()
    return [s1[i] - h[i] for i in range(3)] + s1[3:]


# -- split -------------------------------------------------------------------

def _sign(iv: Interval) -> str:
    if iv.is_nonnegative() and iv.is_nonpositive():
        return "0"
    if iv.is_nonnegative():
        return "+"
    if iv.is_nonpositive():
        return "-"
    return "?"


def _admissible(signs: dict, n: int, m: int) -> bool:
    head = all(signs[k] in "+0" for k in range(2, m))
    tail = all(signs[k] in "-0" for k in range(m + 1, n))
    return head and tail and (n - m) % 2 == 0


def _try_split(seq: CoefficientSequence):
    n = seq.n
    signs = {k: _sign(seq.second_diff(k)) for k in range(2, n)}
    for m in range(2, n + 1):
        if _admissible(signs, n, m):
            return m, signs
    return None, signs


def _split(seq: CoefficientSequence):
    """(m, sequence actually used); m == n means fully convex."""
    if seq.n < 5:
        raise ValueError(f"split needs n >= 5, got {seq.n}")
    base = seq.prec
    current = seq
    signs = {}
    for factor in ESCALATION:
        if factor > 1:
            current = seq.refined(base * factor)
            if current is None:
                break
        m, signs = _try_split(current)
        if m is not None:
            return m, current
    bad = [k for k, s in signs.items() if s == "?"]
    k = bad[0] if bad else seq.n - 1
    raise SplitError(k, f"n={seq.n}: sign of second difference at k={k} undecidable "
                        f"(signs {''.join(signs[j] for j in sorted(signs))})")


def split_point(seq: CoefficientSequence):
    m, _ = _split(seq)
    return FULLY_CONVEX if m == seq.n else m


# -- decomposition -------------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    n: int
    beta: Interval
    m: int
    h_coeffs: tuple
    k_coeffs: tuple
    d_weights: tuple
    t_summands: int
    seq: CoefficientSequence = field(repr=False)
    h_comb: tuple = field(repr=False, default=())
    k_comb: tuple = field(repr=False, default=())

    @property
    def fully_convex(self) -> bool:
        return self.m == self.n

    @property
    def m_star(self) -> int:
        """Last tau index appearing in T."""
        return self.n - 1

    def eval_H(self, x: Interval, alternating: bool = False) -> Interval:
        return sine_sum(list(self.h_coeffs), x, alternating)

    def eval_K(self, x: Interval, alternating: bool = False) -> Interval:
        return sine_sum(list(self.k_coeffs), x, alternating)

    def eval_T(self, x: Interval, alternating: bool = False) -> Interval:
        total = zero(self.seq.prec)
        for i, d in enumerate(self.d_weights):
            total = total + d * tau(self.m + i, x, alternating, prec=self.seq.prec).value
        return total

    def eval_parts(self, x: Interval, alternating: bool = False) -> Interval:
        return self.eval_H(x, alternating) + self.eval_K(x, alternating) + self.eval_T(x, alternating)

    def d_nondecreasing(self) -> bool:
        # d_{k+1} - d_k = -box_{k+1}, certified <= 0 in the concave tail
        return all((self.d_weights[i + 1] - self.d_weights[i]).is_nonnegative()
                   or self.seq.second_diff(self.m + i + 1).is_nonpositive()
                   for i in range(len(self.d_weights) - 1))


def build(seq: CoefficientSequence, m: int | None = None) -> Decomposition:
    if m is None:
        m, seq = _split(seq)
    n = seq.n
    if m < 5:
        raise StructureError(f"n={n}: split index m = {m} < 5")
    hc = h_combos()
    kc = k_combos(m)
    d = tuple(seq.d(k) for k in range(m, n))
    return Decomposition(
        n=n, beta=seq.beta, m=m,
        h_coeffs=tuple(c.eval(seq) for c in hc),
        k_coeffs=tuple(c.eval(seq) for c in kc),
        d_weights=d, t_summands=len(d), seq=seq,
        h_comb=tuple(hc), k_comb=tuple(kc),
    )


def count_T_summands(n: int, beta: Interval | None = None, prec: int | None = None) -> int:
    """Number of d-weights in T; beta defaults to the sharp exponent."""
    if n < 7:
        raise ValueError(f"count_T_summands needs n >= 7, got {n}")
    if beta is None:
        p = prec or 128
        seq = CoefficientSequence.build(n, beta1(p), beta1)
    else:
        seq = CoefficientSequence.build(n, beta)
    m, _ = _split(seq)
    return n - m


# -- h functions ---------------------------------------------------------------

@dataclass(frozen=True)
class HFunctionFamily:
    y: Interval
    beta: Interval
    h1: Interval
    h2: Interval
    h3: Interval
    h4: Interval
    h5: Interval

    def values(self):
        return (self.h1, self.h2, self.h3, self.h4, self.h5)

    def consistent(self) -> bool:
        return (self.h4.overlaps(self.h1 - self.h2 * 2 + self.h3)
                and self.h5.overlaps(self.h2 - self.h3 * 2))


def p_powers(y: Interval, beta: Interval):
    """P_k(y)^beta for k = 2..5, P_k = (1 - (k^2-1) y) / k."""
    out = {}
    for k in (2, 3, 4, 5):
        base = (1 - y * (k * k - 1)) / k
        out[k] = pow_(base, beta)
    return out


def h_family(y, beta: Interval) -> HFunctionFamily:
    top = Fraction(1, 48)
    if not isinstance(y, Interval):
        if not 0 <= Fraction(y) <= top:
            raise ValueError(f"y must lie in [0, 1/48], got {y}")
        y = Interval(Fraction(y), prec=beta.prec)
    # an outward-rounded enclosure of 1/48 may poke out by an ulp
    elif y.lo_fraction < 0 or y.hi_fraction > top + 2 * ulp(top, y.prec):
        raise ValueError(f"y must lie in [0, 1/48], got {y}")
    p = p_powers(y, beta)
    h1 = 1 - p[4] * 4 + p[5] * 3
    h2 = p[2] - p[4] * 3 + p[5] * 2
    h3 = p[3] - p[4] * 2 + p[5]
    h4 = 1 - p[2] * 2 + p[3]
    h5 = p[2] - p[3] * 2 + p[4]
    return HFunctionFamily(y, beta, h1, h2, h3, h4, h5)


def x_star_squared(beta: Interval) -> Interval:
    return (sqrt(5 - beta * 4) + beta - 2) / (1 - beta)


def x_star(beta: Interval) -> Interval:
    """Radius below which a_k is convex in k; defined for beta < 1."""
    return sqrt(x_star_squared(beta))
