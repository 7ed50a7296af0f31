"""Lower bounds for H^-(n0, b1)/x at the anchors n0 = 7, 15, 45, the
region-2 thresholds, and the displayed constants of the main argument."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..decompose import h_combos, x_star_squared
from ..interval import DEFAULT_PRECISION, Interval, beta1, beta2, cos, pow_, sqrt
from ..sinepoly import CoefficientSequence, coeff, sine_sum, theta
from ..certify.dif import format_rational as dec
from .report import LemmaReport

F = Fraction

# anchor n0 -> right end of the x range where H^-(n0, b1)/x is used
ANCHOR_RANGE = {7: F(75, 100), 15: F(25, 10) / 15, 45: F(25, 10) / 45}
STAGE2B_END = F(267, 100) / 7

# printed values
PRINTED = {
    "H7/x at 0.75": F("0.2232352723"),
    "H7/x at 2.67/7": F("0.2285"),
    "H15/x at 2.5/15": F("0.248"),
    "H45/x at 2.5/45": F("0.250772629"),
    "a2 bound": F("0.662"),
    "n a_{n-1} bound": F("1.105"),
    "H bound in threshold": F("0.2232"),
    "C1": F("2.660223693"),
    "C2": F("2.4602482"),
    "two-summand T bound": F("0.196"),
}

TEN_SUMMAND_ADDENDS = (F("0.196"), F("0.0206"), F("0.009"), F("0.005171"), F("0.003451"))
TEN_SUMMAND_TOTAL = F("0.234222")
FIN_ADDENDS = (F("0.1636") / 2, F("0.006902"), F("0.010342"), F("0.018"), F("0.0326"), F("0.3428"))
FIN_TOTAL = F("0.492444")
ODD_DELTA_BOUNDS = {3: F("0.0412"), 5: F("0.018"), 7: F("0.010342"), 9: F("0.006902")}
DN6_BOUND = F("0.0326")
THETA12_BOUND = F("0.3921")
THETA45_BOUND = F("0.3428")
TAIL14_BOUND = F("0.1636")
# the n = 45 value is 0.1636418, just above the printed bound
TAIL14_ROUNDED_UP = F("0.16365")
# theta(12)/2 rounded up; the printed 0.196 is below theta(12)/2
TWO_SUMMAND_BOUND = F("0.19605")


def iv(q, prec: int) -> Interval:
    return Interval(F(q), prec=prec)


@lru_cache(maxsize=None)
def anchor_coeffs(n0: int, prec: int = DEFAULT_PRECISION):
    """(c1, c2, c3) of H(n0, b1)."""
    seq = CoefficientSequence.build(n0, beta1(prec))
    return tuple(c.eval(seq) for c in h_combos())


def h_minus_over_x(n0: int, x, prec: int = DEFAULT_PRECISION) -> Interval:
    x = x if isinstance(x, Interval) else iv(x, prec)
    return sine_sum(list(anchor_coeffs(n0, prec)), x, alternating=True) / x


@dataclass(frozen=True)
class Concavity:
    """phi''(x)/sin(x) = q(cos x) for phi = c1 s(1) - c2 s(2) + c3 s(3)."""

    n0: int
    x_end: Fraction
    quad: tuple           # (A, B, C) of q(X) = A X^2 + B X + C
    roots: tuple          # enclosures, ascending
    X_low: Interval       # cos(x_end)
    passed: bool


def concavity_quadratic(c1: Interval, c2: Interval, c3: Interval):
    return (c3 * -36, c2 * 8, c3 * 9 - c1)


@lru_cache(maxsize=None)
def anchor_concavity(n0: int, x_end: Fraction | None = None, prec: int = DEFAULT_PRECISION) -> Concavity:
    x_end = ANCHOR_RANGE[n0] if x_end is None else F(x_end)
    c1, c2, c3 = anchor_coeffs(n0, prec)
    A, B, C = concavity_quadratic(c1, c2, c3)
    disc = B * B - A * C * 4
    r = sqrt(disc)
    roots = sorted([(-B + r) / (A * 2), (-B - r) / (A * 2)], key=lambda v: v.lo)
    X_low = cos(iv(x_end, prec))
    q1 = A + B + C
    # A < 0: q is negative to the right of the larger root
    ok = A.is_negative() and roots[1].certainly_lt(X_low) and q1.is_negative()
    return Concavity(n0, x_end, (A, B, C), tuple(roots), X_low, ok)


@lru_cache(maxsize=None)
def anchor_bounds(prec: int = DEFAULT_PRECISION) -> dict:
    """Certified lower bounds for H^-(n0,b1)/x on (0, x_end], keyed by n0."""
    out = {}
    for n0, x_end in ((7, F(75, 100)), (7, STAGE2B_END), (15, ANCHOR_RANGE[15]), (45, ANCHOR_RANGE[45])):
        conc = anchor_concavity(n0, x_end, prec)
        v = h_minus_over_x(n0, x_end, prec)
        out[(n0, x_end)] = (v, conc.passed)
    return out


def thresholds(prec: int = DEFAULT_PRECISION) -> dict:
    h1 = iv(PRINTED["H bound in threshold"], prec)
    h2 = iv(PRINTED["H7/x at 2.67/7"], prec)
    k = iv(PRINTED["n a_{n-1} bound"], prec)
    c1 = k / (h1 * 2 * cos(iv(F(375, 1000), prec)))
    c2 = k / (h2 * 2 * cos(iv(STAGE2B_END / 2, prec)))
    return {"C1": c1, "C2": c2}


def h_lower_bounds(prec: int = DEFAULT_PRECISION) -> LemmaReport:
    rep = LemmaReport("h-bounds", "H^-(n0,b1)/x at the anchor points")
    b = anchor_bounds(prec)
    rows = (
        ((7, F(75, 100)), "H7/x at 0.75", "contains"),
        ((7, STAGE2B_END), "H7/x at 2.67/7", "above"),
        ((15, ANCHOR_RANGE[15]), "H15/x at 2.5/15", "above"),
        ((45, ANCHOR_RANGE[45]), "H45/x at 2.5/45", "above"),
    )
    for key, name, mode in rows:
        v, conc = b[key]
        n0, x_end = key
        rep.const(name, v)
        conc_obj = anchor_concavity(n0, x_end, prec)
        rep.add(f"H^-({n0},b1) concave on (0, {dec(x_end)}] so H^-/x decreases there", "interval", conc,
                f"larger root of q(X) {conc_obj.roots[1].fmt(12)} < cos(x_end) {conc_obj.X_low.fmt(12)}")
        p = PRINTED[name]
        if mode == "contains":
            err = max(abs(v.lo_fraction - p), abs(v.hi_fraction - p))
            rep.add(f"{name} = {dec(p)} to within 1e-9", "interval", err <= F(1, 10**9), f"enclosure {v.fmt(13)}",
                    value=v)
        else:
            rep.add(f"{name} > {dec(p)}", "interval", v.lo_fraction > p, f"enclosure {v.fmt(13)}", value=v)

    # the decreasing ratio on a grid, as a cross-check of the concavity argument
    pts = [F(75, 100) * i / 64 for i in range(1, 65)]
    vals = [h_minus_over_x(7, t, prec) for t in pts]
    ok = all(not vals[i + 1].certainly_gt(vals[i]) for i in range(63))
    rep.add("H^-(7,b1)/x nonincreasing at 64 grid points of (0, 0.75]", "grid", ok)
    return rep


def constants_report(prec: int = DEFAULT_PRECISION) -> LemmaReport:
    """Every displayed constant of the main argument, as an enclosure."""
    rep = LemmaReport("constants", "displayed constants of the main argument")
    b1, b2 = beta1(prec), beta2(prec)
    rep.const("beta1", b1)
    rep.const("beta2", b2)
    rep.add("beta1 = 0.59592...", "interval", abs(b1.mid() - F("0.59592")) < F(1, 10**5), b1.fmt(16), b1)
    rep.add("beta2 = 0.8714162659 to 1e-9", "interval", abs(b2.mid() - F("0.8714162659")) <= F(1, 10**9),
            b2.fmt(16), b2)
    rep.add("(5/16)^beta1 = 1/2", "interval", coeff(3, 2, b1).contains(F(1, 2)))
    rep.add("second difference at k=6, n=7 vanishes at beta2", "interval",
            CoefficientSequence.build(7, b2).second_diff(6).contains(0))

    p = pow_(iv(F(1, 2), prec), b1)
    rep.const("2^-beta1", p)
    rep.add("a_2 <= 2^-beta1 < 0.662", "interval", p.hi_fraction < PRINTED["a2 bound"], p.fmt(10), p)

    na = coeff(7, 6, b1) * 7
    rep.const("7 a_{7,6}(beta1)", na)
    rep.add("n a_{n-1} at n = 7 <= 1.105", "interval", na.hi_fraction <= PRINTED["n a_{n-1} bound"],
            na.fmt(10), na)

    th = thresholds(prec)
    for key in ("C1", "C2"):
        v = th[key]
        rep.const(key, v)
        target = PRINTED[key]
        err = max(abs(v.lo_fraction - target), abs(v.hi_fraction - target))
        rep.add(f"threshold {key} = {dec(target)} to within 1e-6", "interval", err <= F(1, 10**6),
                f"recomputed {v.fmt(12)}", v)

    for key, name, mode in (((7, F(75, 100)), "H7/x at 0.75", "contains"),
                            ((7, STAGE2B_END), "H7/x at 2.67/7", "above"),
                            ((15, ANCHOR_RANGE[15]), "H15/x at 2.5/15", "above"),
                            ((45, ANCHOR_RANGE[45]), "H45/x at 2.5/45", "above")):
        v, _ = anchor_bounds(prec)[key]
        rep.const(name, v)
        p_ = PRINTED[name]
        if mode == "contains":
            ok = abs(v.mid() - p_) <= F(1, 10**9)
        else:
            ok = v.lo_fraction > p_
        rep.add(f"{name} vs printed {dec(p_)}", "interval", ok, v.fmt(13), v)

    xs2 = x_star_squared(b1)
    rep.const("x_*^2(beta1)", xs2)
    rep.add("radicand of x_*(beta1) = 0.5281747 to within 1e-6", "interval",
            abs(xs2.mid() - F("0.5281747")) <= F(1, 10**6), xs2.fmt(12), xs2)

    t12, t45 = theta(12, b1), theta(45, b1)
    rep.const("theta(12)", t12)
    rep.const("theta(45)", t45)
    rep.add("theta(12) < 0.3921", "interval", t12.hi_fraction < THETA12_BOUND, t12.fmt(12), t12)
    rep.add("theta(45) < 0.3428", "interval", t45.hi_fraction < THETA45_BOUND, t45.fmt(12), t45)
    half12 = t12 / 2
    rep.add("theta(12)/2 <= 0.19605 (used for the two-summand bound)", "interval",
            half12.hi_fraction <= TWO_SUMMAND_BOUND, half12.fmt(12), half12)
    if half12.lo_fraction > PRINTED["two-summand T bound"]:
        rep.note(f"theta(12)/2 = {half12.fmt(8)} exceeds the printed 0.196; 0.19605 is used instead")

    s1 = sum(TEN_SUMMAND_ADDENDS)
    rep.add("0.196 + 0.0206 + 0.009 + 0.005171 + 0.003451 = 0.234222", "exact", s1 == TEN_SUMMAND_TOTAL,
            f"exact sum {dec(s1)}")
    halves = [ODD_DELTA_BOUNDS[k] / 2 for k in (3, 5, 7, 9)]
    rep.add("0.0206, 0.009, 0.005171, 0.003451 are halves of the odd-delta bounds", "exact",
            halves == list(TEN_SUMMAND_ADDENDS[1:]))
    rep.add("0.234222 < 0.248", "exact", TEN_SUMMAND_TOTAL < PRINTED["H15/x at 2.5/15"])
    s2 = sum(FIN_ADDENDS)
    rep.add("0.1636/2 + 0.006902 + 0.010342 + 0.018 + 0.0326 + 0.3428 = 0.492444", "exact",
            s2 == FIN_TOTAL, f"exact sum {dec(s2)}")
    rep.add("0.492444 < 2 x 0.250772628", "exact", FIN_TOTAL < 2 * F("0.250772628"))
    return rep
