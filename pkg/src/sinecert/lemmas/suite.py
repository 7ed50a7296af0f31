"""Per-lemma verification.  Each ``verify_*`` returns a LemmaReport whose
steps are individually checked claims; ``verify_lemma`` dispatches by id."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..certify.criteria import SUP_AT_LOW, PowerDiffFn, xi_endpoint_reduce
from ..certify.dif import CertificationError, check_certificate, dif_certify
from ..certify.dif import format_rational as dec
from ..certify.monotone import DECREASING, INCREASING, MonotoneFn, Verdict, verify_monotone
from ..certify.sturm import RationalPolynomial, sturm_positive
from ..decompose import Combo, h_combos, x_star_squared
from ..interval import (DEFAULT_PRECISION, Interval, beta1, cos, exp, ln, pi, pow_, sqrt)
from ..sinepoly import CoefficientSequence, coeff, coeff_base, theta
from . import bounds
from .bounds import (DN6_BOUND, FIN_ADDENDS, ODD_DELTA_BOUNDS, TAIL14_BOUND, TAIL14_ROUNDED_UP,
                     THETA12_BOUND, THETA45_BOUND)
from .report import LemmaReport

F = Fraction
X = RationalPolynomial.x()
ONE = RationalPolynomial.const(1)

LEMMA_IDS = ("b5", "fc", "BB", "H7b", "mono11", "delta1", "delta_odd", "tail14")

# n windows checked instance by instance before the tail bounds take over
DELTA1_WINDOW = 60
DELTA_ODD_WINDOW = 999
TAIL14_WINDOW = 300


def _iv(q, prec):
    return Interval(F(q), prec=prec)


def _poly(coeffs_high_first):
    return RationalPolynomial(list(reversed([F(c) for c in coeffs_high_first])))


# -- Lemma: the numerator on [0.75, pi] -----------------------------------------

def verify_b5(prec: int = DEFAULT_PRECISION) -> LemmaReport:
    rep = LemmaReport("b5", "s(1/2) + 0.338 s(3/2) - 0.662 >= 0 on [0.75, pi]")
    q = _poly([676, 676, -331])
    # with x = pi - 2t and X = cos t: cos t - 0.338 cos 3t - 0.662, cos 3t = 4X^3 - 3X
    lhs = X - F("0.338") * (4 * X ** 3 - 3 * X) - F("0.662")
    rhs = (ONE - X) * q * F(1, 500)
    rep.add("cos t - 0.338 cos 3t - 0.662 = (1/500)(1 - X)(676X^2 + 676X - 331)", "exact", lhs == rhs)
    lo = cos((pi(prec) - _iv(F(3, 4), prec)) / 2)
    rep.const("cos((pi - 0.75)/2)", lo)
    rep.add("X range lower end cos((pi-0.75)/2) > 0.366", "interval", lo.lo_fraction > F("0.366"), lo.fmt(10))
    if lo.hi_fraction < F("0.4"):
        rep.note(f"cos((pi-0.75)/2) = {lo.fmt(8)} lies below 0.4, so the X range is not inside [0.4, 1]; "
                 "positivity is certified on (0.366, 1) as well as on (0.4, 1)")
    rep.add_sturm("676X^2 + 676X - 331 > 0 on (0.4, 1)", sturm_positive(q, F("0.4"), 1))
    rep.add_sturm("676X^2 + 676X - 331 > 0 on (0.366, 1)", sturm_positive(q, F("0.366"), 1))
    rep.add("quadratic positive at X = 0.366 and 1 - X >= 0 on the range", "exact",
            q(F("0.366")) > 0, f"q(0.366) = {dec(q(F('0.366')))}")
    rep.add("c_k > 0 decreasing with c_1 = 1, c_2 = a_2 <= 2^-b1 < 0.662 gives the comparison bound",
            "analytic", True, "(1 + s(3/2)) >= 0, so lowering c_2 to 0.662 only raises the numerator")
    return rep


# -- Lemma: convex/concave structure ------------------------------------------------

def _log_monomial_derivs(p: Fraction, q: Fraction, r: int, steps: int):
    """Differentiate (p + q ln t) t^-r ``steps`` times, exactly."""
    out = [(p, q, r)]
    for _ in range(steps):
        p, q, r = q - r * p, -r * q, r + 1
        out.append((p, q, r))
    return out


def verify_fc(prec: int = DEFAULT_PRECISION) -> LemmaReport:
    rep = LemmaReport("fc", "second differences decrease in k; convex head, concave tail")
    a = (X ** 2 + 1) ** 3
    b = _poly([3, 0, 15, 0, 9, 0, -3])
    c = _poly([2, 0, 18, 0, -6, 0, 2])
    rep.add("x^6 + 3x^4 + 3x^2 + 1 = (x^2 + 1)^3", "exact", a == _poly([1, 0, 3, 0, 3, 0, 1]))
    g0 = c
    g1 = a - b + c
    rep.add("g(x;1) = 6x^4 - 12x^2 + 6", "exact", g1 == _poly([6, 0, -12, 0, 6]))
    num3 = _poly([-1, 0, 8, 0, -78, 0, 56, 0, -1])
    rep.add("4ac - b^2 = (-x^8 + 8x^6 - 78x^4 + 56x^2 - 1)(x^2 + 1)^2, so g(x;sigma) has that numerator",
            "exact", a * c * 4 - b * b == num3 * (X ** 2 + 1) ** 2)
    rep.add("sigma = b/(2a) = 3(x^4 + 4x^2 - 1)/(2(x^4 + 2x^2 + 1))", "exact",
            b == (X ** 4 + 4 * X ** 2 - 1) * (X ** 2 + 1) * 3)
    rep.add_sturm("case 1: g(x;0) = 2x^6 + 18x^4 - 6x^2 + 2 > 0 on (0, 1)", sturm_positive(g0, 0, 1))
    rep.add_sturm("case 2: g(x;1) = 6x^4 - 12x^2 + 6 > 0 on (0.63, 0.99)", sturm_positive(g1, F("0.63"), F("0.99")))
    rep.add_sturm("case 2: g(x;1) > 0 on (0.76, 1 - 1e-6)",
                  sturm_positive(g1, F("0.76"), 1 - F(1, 10**6)))
    rep.note("g(x;1) = 6(1 - x^2)^2 vanishes at x = 1; the endpoint is excluded and f''' < 0 is only "
             "claimed on the open range")
    rep.add_sturm("case 3: -x^8 + 8x^6 - 78x^4 + 56x^2 - 1 > 0 on (0.4, 0.8)",
                  sturm_positive(num3, F("0.4"), F("0.8")))
    five = _iv(5, prec)
    x1 = sqrt(sqrt(five) - 2)
    x2 = sqrt(sqrt(_iv(21, prec)) - 4)
    rep.const("x1", x1)
    rep.const("x2", x2)
    rep.add("0.4 < x1 < x2 < 0.8 and x2 > 0.76, so the three cases cover (0, 1)", "interval",
            x1.lo_fraction > F("0.4") and x2.hi_fraction < F("0.8") and x2.lo_fraction > F("0.76")
            and x1.hi_fraction < F("0.63"),
            f"x1 = {x1.fmt(10)}, x2 = {x2.fmt(10)}")

    b1 = beta1(prec)
    xs2 = x_star_squared(b1)
    rep.const("x_*^2(b1)", xs2)
    rep.const("x_*(b1)", sqrt(xs2))
    rep.add("radicand (sqrt(5-4b) + b - 2)/(1-b) at b1 = 0.5281747 to 1e-6", "interval",
            abs(xs2.mid() - F("0.5281747")) <= F(1, 10**6), xs2.fmt(12), xs2)
    fpp = (b1 - 1) * xs2 * xs2 + (b1 * 2 - 4) * xs2 + (b1 + 1)
    rep.add("X = x_*^2 is a root of (b-1)X^2 + (2b-4)X + (b+1)", "interval", fpp.contains(0), fpp.fmt(6))
    printed = (b1 - 1) * xs2 * xs2 + (b1 * 2 - 4) * xs2 + 1
    if not printed.contains(0):
        rep.note(f"with constant term 1 instead of b+1 the factor of f'' is {printed.fmt(6)} at X = x_*^2, "
                 f"so the displayed f'' has a typo; the inflection point is x_* = {sqrt(xs2).fmt(10)}, "
                 "whose square is the displayed 0.5281747")
    kappa_ok = all((xs2.lo_fraction * n - 1) // 1 >= 4 for n in range(10, 11))
    rep.add("0.5281747 n - 1 >= 4 once n >= 10 (kappa >= 4)", "interval",
            kappa_ok and xs2.lo_fraction * 10 - 1 >= 4, "monotone in n")
    for n in range(6, 10):
        seq = CoefficientSequence.build(n, b1)
        boxes = [seq.second_diff(k) for k in range(2, min(5, n))]
        rep.add(f"n = {n}: second differences at k = 2..{min(4, n - 1)} are >= 0 at b1", "interval",
                all(v.is_nonnegative() for v in boxes), ", ".join(v.fmt(6) for v in boxes))
    seq5 = CoefficientSequence.build(5, b1)
    rep.note(f"n = 5: the k = 4 second difference is {seq5.second_diff(4).fmt(6)} < 0 at b1 (a_5 = 0); "
             "the structural claim is only used for n >= 7")
    rep.add("convexity at b1 persists for larger beta (power of a convex sequence)", "analytic", True,
            "a_k(beta) = a_k(b1)^(beta/b1) with t^(beta/b1) convex increasing")
    return rep


# -- Lemma: (1+B)^beta + (1-B)^beta increases in beta ------------------------------

def _series_theta2(deg: int) -> RationalPolynomial:
    """Taylor polynomial of (1-B) ln^2(1-B) through B^deg, exact."""
    L = RationalPolynomial([0] + [F(-1, k) for k in range(1, deg + 1)])
    sq = L * L
    full = (ONE - X) * sq
    return RationalPolynomial(full.c[: deg + 1])


def verify_bb(prec: int = DEFAULT_PRECISION, max_points: int = 64) -> LemmaReport:
    rep = LemmaReport("BB", "(1+B)^beta + (1-B)^beta increases in beta on [1/2, 1]")
    rep.add("beta >= 1/2 reduces the claim to theta1 = (1+B)ln^2(1+B) >= theta2 = (1-B)ln^2(1-B)",
            "analytic", True, "the derivative in beta is smallest at beta = 1/2 after dividing by powers")
    split = F(86, 100)
    tau = 1 - exp(_iv(-2, prec))
    rep.const("tau = 1 - e^-2", tau)
    rep.add("case split at 0.86 < tau, where theta2 peaks", "interval", tau.lo_fraction > split, tau.fmt(10))
    rep.note("the split is taken at the rational 0.86 rather than at tau = 1 - e^-2 so that every "
             "dif and Sturm range has rational endpoints")

    # case 1: [0.86, 1)
    t1 = (1 + _iv(split, prec)) * ln(1 + _iv(split, prec)) ** 2
    top2 = exp(_iv(-2, prec)) * 4
    rep.const("theta1(0.86)", t1)
    rep.const("max theta2 = 4 e^-2", top2)
    rep.add("theta1' = ln^2(1+B) + 2 ln(1+B) >= 0, theta2' = -ln(1-B)(ln(1-B) + 2) changes sign at tau",
            "analytic", True, "so theta1 increases on [0,1] and theta2 <= theta2(tau) = 4 e^-2")
    rep.add("case 1: theta1(0.86) > 4 e^-2 >= theta2 on [0.86, 1)", "interval", t1.certainly_gt(top2),
            f"{t1.fmt(8)} vs {top2.fmt(8)}")

    # case 2: [0.4, 0.86] by a dif certificate
    g1 = MonotoneFn("(1 + x)*ln(1 + x)**2", INCREASING, F(2, 5), split)
    g2 = MonotoneFn("(1 - x)*ln(1 - x)**2", INCREASING, F(2, 5), split)
    try:
        cert = dif_certify(g1, g2, max_points=max_points, prec=prec, label="BB-case2")
        rep.certificates.append(cert)
        rep.add("case 2: theta1 > theta2 on [0.4, 0.86] (dif)", "dif", bool(check_certificate(cert)),
                f"{cert.points} points, monotonicity {cert.monotonicity}")
    except CertificationError as exc:
        rep.add("case 2: theta1 > theta2 on [0.4, 0.86] (dif)", "dif", False, str(exc))

    # case 3: [0, 0.4]
    p4 = X - X ** 2 / 2 + X ** 3 / 3 - X ** 4 / 4
    rep.add_sturm("B - B^2/2 + B^3/3 - B^4/4 > 0 on (0, 0.4), so squaring the log bound is safe",
                  sturm_positive(p4 // X, 0, F(2, 5)))
    rep.add("ln(1+B) >= B - B^2/2 + B^3/3 - B^4/4 (alternating series)", "analytic", True)
    rep.note("the displayed bound for theta1 omits the leading B inside the square; "
             "(1+B)(B - B^2/2 + B^3/3 - B^4/4)^2 is used")
    poly2 = X ** 2 - X ** 4 / 12 - X ** 5 / 12
    rep.add("theta2 = B^2 - B^4/12 - B^5/12 + O(B^6) (exact series)", "exact",
            _series_theta2(5) == poly2, f"series {_series_theta2(7)}")
    derivs = _log_monomial_derivs(F(2), F(2), 1, 4)
    p6, q6, r6 = derivs[-1]
    rep.add("d^6/dB^6 theta2 = (-52 + 48 ln(1-B))/(1-B)^5 (exact recurrence from theta2'')",
            "exact", (p6, q6, r6) == (-52, 48, 5), f"(p, q, r) chain {derivs}")
    six = MonotoneFn("(52 - 48*ln(1 - x))/(1 - x)**5", INCREASING, 0, F(2, 5))
    v = six.expr.eval(six.domain(prec), prec)
    rep.add("(52 - 48 ln(1-B))/(1-B)^5 > 0 on [0, 0.4]", "interval", v.is_positive(), v.fmt(6))
    diff = (ONE + X) * p4 * p4 - poly2
    k = 0
    while diff.c[k] == 0:
        k += 1
    reduced = diff // (X ** k)
    rep.add_sturm(f"(1+B)(B - B^2/2 + B^3/3 - B^4/4)^2 - (B^2 - B^4/12 - B^5/12) > 0 on (0, 0.4) "
                  f"(divided by B^{k})", sturm_positive(reduced, 0, F(2, 5)))
    return rep


# -- Lemma: concavity of H^-(7, b1) --------------------------------------------------

H7B_ROOTS = (F("0.39281956258689586"), F("0.67755077339437549"))


def verify_h7b(prec: int = DEFAULT_PRECISION) -> LemmaReport:
    rep = LemmaReport("H7b", "H^-(7, b1) is concave on [0, 0.75]")
    bases = {2: F(15, 32), 3: F(5, 18), 4: F(11, 64), 5: F(1, 10), 6: F(13, 288)}
    rep.add("n = 7 bases are 15/32, 5/18, 11/64, 1/10, 13/288", "exact",
            all(coeff_base(7, k) == v for k, v in bases.items()))
    c1, c2, c3 = h_combos()
    A, B, C = c3 * -36, c2 * 8, c3 * 9 - c1
    rep.add("X^2 coefficient 72(11/64)^b - 36(1/10)^b - 36(5/18)^b = -36 c3", "exact",
            A == Combo({4: 72, 5: -36, 3: -36}))
    rep.add("X coefficient 8(15/32)^b - 24(11/64)^b + 16(1/10)^b = 8 c2", "exact",
            B == Combo({2: 8, 4: -24, 5: 16}))
    rep.add("constant 9(5/18)^b - 14(11/64)^b + 6(1/10)^b - 1 = 9 c3 - c1", "exact",
            C == Combo({3: 9, 4: -14, 5: 6, 1: -1}))
    rep.add("phi''(x)/sin(x) = -36 c3 cos^2 x + 8 c2 cos x + 9 c3 - c1", "analytic", True,
            "sin 2x = 2 sin x cos x, sin 3x = sin x (4 cos^2 x - 1)")
    conc = bounds.anchor_concavity(7, F(3, 4), prec)
    for i, (r, want) in enumerate(zip(conc.roots, H7B_ROOTS), 1):
        rep.const(f"root{i}", r)
        err = max(abs(r.lo_fraction - want), abs(r.hi_fraction - want))
        rep.add(f"root {i} = {dec(want)} to within 1e-12", "interval", err <= F(1, 10**12), r.fmt(20), r)
    rep.const("cos(0.75)", conc.X_low)
    rep.add("both roots below cos(0.75), leading coefficient and q(1) negative", "interval", conc.passed,
            f"cos(0.75) = {conc.X_low.fmt(10)}")
    # for X >= 0, q(X) <= A_hi X^2 + B_hi X + C_hi, a rational polynomial
    Aq, Bq, Cq = conc.quad
    env = RationalPolynomial([Cq.hi_fraction, Bq.hi_fraction, Aq.hi_fraction])
    lo = conc.X_low.lo_fraction
    res = sturm_positive(-env, lo, 1, "H7b envelope")
    ends = (-env)(lo) > 0 and (-env)(F(1)) > 0
    rep.add_sturm("rational upper envelope of q(X) < 0 on (cos(0.75), 1)", res)
    rep.add("envelope negative at both ends, so q(X) < 0 on [cos(0.75), 1]", "exact", ends and lo > 0)
    return rep


# -- Lemma: n ((2n-1)/((n^2-1)(n-1)))^b1 decreases -----------------------------------

def verify_mono11(prec: int = DEFAULT_PRECISION) -> LemmaReport:
    rep = LemmaReport("mono11", "n ((2n-1)/((n^2-1)(n-1)))^b1 decreases for n >= 7")
    num = X ** 2 * (2 * X - 1)
    den = (X ** 2 - 1) * (X - 1)
    dnum = num.derivative() * den - num * den.derivative()
    expected = -X * (X ** 3 + 4 * X ** 2 - 7 * X + 2)
    rep.add("d/dn [n^2(2n-1)/((n^2-1)(n-1))] has numerator -n(n^3 + 4n^2 - 7n + 2)", "exact",
            dnum == expected, str(dnum))
    rep.add_sturm("n(n^3 + 4n^2 - 7n + 2) > 0 on (7, inf)", sturm_positive(-dnum, 7, None))
    u_num, u_den = 2 * X - 1, den
    du = u_num.derivative() * u_den - u_num * u_den.derivative()
    rep.add_sturm("the base u(n) = (2n-1)/((n^2-1)(n-1)) decreases on (7, inf)", sturm_positive(-du, 7, None))
    rep.add_sturm("u(n) < 1 on (7, inf)", sturm_positive(u_den - u_num, 7, None))
    b1 = beta1(prec)
    rep.add("b1 > 1/2", "interval", b1.lo_fraction > F(1, 2), b1.fmt(10))
    rep.add("n u^b1 = (n^2 u)^(1/2) u^(b1 - 1/2) is a product of decreasing positive factors", "analytic", True)
    v = coeff(7, 6, b1) * 7
    rep.const("7 a_{7,6}(b1)", v)
    rep.add("n a_{n-1} <= 7 a_{7,6}(b1) <= 1.105 for n >= 7", "interval", v.hi_fraction <= F("1.105"), v.fmt(10))
    return rep


# -- Lemma: (n-1) delta_1 bounds --------------------------------------------------------

def _theta_tail(N: int, b: Interval) -> Interval:
    """Upper bound of theta(n) for all n >= N (b > 1/2)."""
    two_b = pow_(_iv(2, b.prec), b)
    return (2 - two_b) * two_b * pow_(1 - _iv(F(1, N * N), b.prec), -b) * pow_(_iv(N, b.prec), 1 - b * 2)


@lru_cache(maxsize=None)
def theta_table(n_max: int = DELTA1_WINDOW, prec: int = DEFAULT_PRECISION) -> dict:
    b1 = beta1(prec)
    return {n: theta(n, b1) for n in range(7, n_max + 1)}


def verify_delta1(prec: int = DEFAULT_PRECISION, window: int = DELTA1_WINDOW) -> LemmaReport:
    rep = LemmaReport("delta1", "(n-1) delta_1 <= theta(12) < 0.3921 (n >= 7), <= theta(45) < 0.3428 (n >= 45)")
    b1 = beta1(prec)
    th = theta_table(window, prec)
    rep.const("theta(12)", th[12])
    rep.const("theta(45)", th[45])
    up = all(th[n].certainly_lt(th[n + 1]) for n in range(7, 12))
    down = all(th[n].certainly_gt(th[n + 1]) for n in range(12, window))
    rep.add("theta(7) < ... < theta(12) > theta(13) > ... (strict, to the window end)", "interval",
            up and down, f"window 7..{window}")
    rep.add("theta(12) < 0.3921", "interval", th[12].hi_fraction < THETA12_BOUND, th[12].fmt(12), th[12])
    rep.add("theta(45) < 0.3428", "interval", th[45].hi_fraction < THETA45_BOUND, th[45].fmt(12), th[45])
    n = X
    rep.add("4(n-1)^2 - 2(2n-1)(n-2) = 2n, so the bracket base exceeds 2", "exact",
            4 * (n - 1) ** 2 - 2 * (2 * n - 1) * (n - 2) == 2 * n)
    rep.add_sturm("(2n-1)/((n^2-1)(n-1)) < 1 on (7, inf)",
                  sturm_positive((n ** 2 - 1) * (n - 1) - (2 * n - 1), 7, None))
    pos = all((2 - pow_(_iv(F(4 * (k - 1) ** 2, (2 * k - 1) * (k - 2)), prec), b1)).is_positive()
              for k in range(7, window + 1))
    rep.add("2 - (4(n-1)^2/((2n-1)(n-2)))^b1 > 0 in the window", "interval", pos)
    rep.add("both factors of delta_1 decrease in beta, so (n-1) delta_1(beta) <= theta(n)", "analytic", True,
            "first base < 1, second base > 1")
    tail = _theta_tail(window + 1, b1)
    rep.const(f"theta tail bound n >= {window + 1}", tail)
    rep.add(f"theta(n) <= (2 - 2^b1) 2^b1 (1 - N^-2)^-b1 N^(1-2b1) < theta(45) for n >= N = {window + 1}",
            "interval", tail.certainly_lt(th[45]), tail.fmt(10))
    # the printed route through the rewritten form
    f1 = MonotoneFn("(2*x - 1)/((x + 1)*(x - 1)**(1/10))", DECREASING, 15, 10**6)
    rep.add("(2n-1)/((n+1)(n-1)^0.1) decreases on [15, 1e6]", "interval",
            verify_monotone(f1, prec=prec) is Verdict.PASS)
    rep.add_sturm("2n^2 - 29n + 29 > 0 on (14, inf)", sturm_positive(2 * n ** 2 - 29 * n + 29, 14, None))
    half = th[12] / 2
    rep.const("theta(12)/2", half)
    if half.lo_fraction > F("0.196"):
        rep.note(f"theta(12)/2 = {half.fmt(8)} > 0.196; the two-summand bound uses 0.19605")
    return rep


# -- Lemma: odd delta bounds ------------------------------------------------------------

def delta_k(n: int, k: int, b: Interval) -> Interval:
    """delta_k = -box_{n-k} from the three coefficients it needs."""
    j = n - k
    return coeff(n, j, b) * 2 - coeff(n, j - 1, b) - coeff(n, j + 1, b)


def c_k(k: int, b: Interval) -> Interval:
    p = b.prec
    return 2 - pow_(_iv(F(k + 1, k), p), b) - pow_(_iv(F(k - 1, k), p), b)


def odd_delta_tail(k: int, N: int, b: Interval) -> Interval:
    """Upper bound of (n-k) delta_k for all n >= N at exponent b in (1/2, 1]."""
    p = b.prec
    return (pow_(_iv(2 * k, p), b) * pow_(_iv(N, p), 1 - b * 2) * pow_(1 - _iv(F(1, N * N), p), -b)
            * (c_k(k, b) + _iv(F(1, N - k + 1), p)))


@lru_cache(maxsize=None)
def odd_delta_table(n_max: int = DELTA_ODD_WINDOW, prec: int = DEFAULT_PRECISION) -> dict:
    b1 = beta1(prec)
    return {(n, k): delta_k(n, k, b1) * (n - k) for n in range(15, n_max + 1, 2) for k in (3, 5, 7, 9)}


def verify_delta_odd(prec: int = DEFAULT_PRECISION, window: int = DELTA_ODD_WINDOW) -> LemmaReport:
    rep = LemmaReport("delta_odd", "(n-k) delta_k bounds for odd n >= 15, k = 3, 5, 7, 9")
    b1 = beta1(prec)
    tab = odd_delta_table(window, prec)
    for k, bound in ODD_DELTA_BOUNDS.items():
        worst = max((tab[(n, k)] for n in range(15, window + 1, 2)), key=lambda v: v.hi)
        ok = all(tab[(n, k)].hi_fraction < bound for n in range(15, window + 1, 2))
        rep.const(f"max (n-{k}) delta_{k}, n in [15, {window}]", worst)
        rep.add(f"(n-{k}) delta_{k} < {dec(bound)} for odd n in [15, {window}]", "interval", ok, worst.fmt(8))
    ok6 = all(tab[(n, 3)].hi_fraction < DN6_BOUND for n in range(45, window + 1, 2))
    rep.add(f"(n-3) delta_3 < 0.0326 for odd n in [45, {window}]", "interval", ok6,
            f"n = 45: {tab[(45, 3)].fmt(8)}")
    n = X
    ids = all(((2 * n - k - 1) * (n - k) - (2 * n - k) * (n - k - 1) == n)
              and ((2 * n - k) * (n - k + 1) - (2 * n - k + 1) * (n - k) == n) for k in (3, 5, 7, 9))
    rep.add("(2n-k-1)(n-k) - (2n-k)(n-k-1) = n and (2n-k)(n-k+1) - (2n-k+1)(n-k) = n", "exact", ids)
    rep.add("bracket of delta_k <= C_k + 1/(n-k+1) and (n-k) times the prefactor <= "
            "(2k)^b n^(1-2b) (1 - n^-2)^-b", "analytic", True)
    N = window + 2
    for k, bound in ODD_DELTA_BOUNDS.items():
        t = odd_delta_tail(k, N, b1)
        rep.const(f"tail bound k={k}, n >= {N}", t)
        rep.add(f"(n-{k}) delta_{k} < {dec(bound)} for n >= {N}", "interval", t.hi_fraction < bound, t.fmt(8))
    t3 = odd_delta_tail(3, N, b1)
    rep.add(f"(n-3) delta_3 < 0.0326 for n >= {N}", "interval", t3.hi_fraction < DN6_BOUND, t3.fmt(8))

    # printed route for k = 3
    lhs = (8 * n - 16) * (n - 2) * (n ** 2 - 3) * (n - 4) ** 2
    rhs = 2 * (n ** 2 - 6) * (n - 2) ** 2 * (4 * n - 4) * (n - 4)
    rep.add_sturm("(8n-16)(n-2) > (4n-4)(n-4) on (15, inf), so the power 1 - b1 only lowers the left side",
                  sturm_positive((8 * n - 16) * (n - 2) - (4 * n - 4) * (n - 4), 15, None))
    rep.add_sturm("the rational inequality behind G(n) increasing holds on (15, inf)",
                  sturm_positive(rhs - lhs, 15, None))
    g = "(2 - (4/3)**b1 - (2/3)**b1)*(((6*x - 9)*(x - 3)**(1/b1 - 1))/(x**2 - 1))**b1"
    fn = MonotoneFn(g, DECREASING, 15, 10**6)
    rep.add("C_3 ((6n-9)(n-3)^(1/b1-1)/(n^2-1))^b1 decreases on [15, 1e6]", "interval",
            verify_monotone(fn, prec=prec) is Verdict.PASS)
    v15, v99 = fn(15, prec), fn(99, prec)
    rep.const("C_3 bound at n=15", v15)
    rep.const("C_3 bound at n=99", v99)
    rep.add("value at n = 15 < 0.0412", "interval", v15.hi_fraction < ODD_DELTA_BOUNDS[3], v15.fmt(8))
    rep.add("value at n = 99 < 0.0326", "interval", v99.hi_fraction < DN6_BOUND, v99.fmt(8))
    rep.add("beta > b1 only lowers delta_3 (both factors decrease in beta, via BB)", "analytic", True)
    return rep


# -- Lemma: (n-11)(a_{n-10} - a_{n-9}) -----------------------------------------------------

def tail14_value(n: int, b: Interval) -> Interval:
    return (coeff(n, n - 10, b) - coeff(n, n - 9, b)) * (n - 11)


def verify_tail14(prec: int = DEFAULT_PRECISION, window: int = TAIL14_WINDOW) -> LemmaReport:
    rep = LemmaReport("tail14", "(n-11)(a_{n-10} - a_{n-9}) < 0.1636 for n >= 45")
    n = X
    rep.add("n^2 - (n-10)^2 = 20n - 100 and n^2 - (n-9)^2 = 18n - 81", "exact",
            n ** 2 - (n - 10) ** 2 == 20 * n - 100 and n ** 2 - (n - 9) ** 2 == 18 * n - 81)
    rep.note("the displayed numerator 18n - 91 is a typo for 18n - 81; the statement bounds "
             "a_{n-10} - a_{n-9} while the proof bounds (n-11) times it, and the latter is verified")
    b1 = beta1(prec)
    A, B = coeff_base(45, 35), coeff_base(45, 36)
    verdict = xi_endpoint_reduce(PowerDiffFn(1, 0, A, B, B), b1)
    rep.add("n = 45: xi(beta) = A^beta - B^beta has its sup at beta = b1", "interval", verdict == SUP_AT_LOW,
            verdict)
    rep.add_sturm("A - B > 0: 2n^2 - 19n + 90 > 0 on (45, inf)",
                  sturm_positive(2 * n ** 2 - 19 * n + 90, 45, None))
    rep.add_sturm("A < 1/6: (n^2-1)(n-10) - 120(n-5) > 0 on (45, inf)",
                  sturm_positive((n ** 2 - 1) * (n - 10) - 120 * (n - 5), 45, None))
    e = exp(-1 / b1)
    rep.add("1/6 < e^(-1/b1), so t^b1 ln t decreases on (0, A] and xi'(b1) <= 0 for all n >= 45", "interval",
            e.lo_fraction > F(1, 6), e.fmt(8))
    vals = {k: tail14_value(k, b1) for k in range(45, window + 1)}
    rep.const("n = 45 value", vals[45])
    worst = max(vals.values(), key=lambda v: v.hi)
    rep.add(f"(n-11)(a_(n-10) - a_(n-9)) < 0.1636 at b1 for n in [45, {window}]", "interval",
            worst.hi_fraction < TAIL14_BOUND, f"max {worst.fmt(8)}")
    rep.add(f"(n-11)(a_(n-10) - a_(n-9)) < 0.16365 at b1 for n in [45, {window}]", "interval",
            worst.hi_fraction < TAIL14_ROUNDED_UP, f"max {worst.fmt(8)}")
    if worst.lo_fraction > TAIL14_BOUND:
        rep.note(f"the maximum {worst.fmt(8)} (at n = 45) exceeds 0.1636; with 0.16365 in its place "
                 "the final sum is still below twice the n = 45 anchor bound")
    total = sum(FIN_ADDENDS) - TAIL14_BOUND / 2 + TAIL14_ROUNDED_UP / 2
    rep.add(f"sum with 0.16365/2 = {dec(total)} < 2 x 0.250772628", "exact", total < 2 * F("0.250772628"))
    N = window + 1
    p = prec
    tail = (pow_(_iv(N, p), 1 - b1 * 2) * pow_(1 - _iv(F(1, N * N), p), -b1)
            * (pow_(_iv(20 + F(100, N - 10), p), b1) - pow_(_iv(18, p), b1)))
    rep.const(f"tail bound n >= {N}", tail)
    rep.add(f"tail bound for n >= {N} < 0.1636", "interval", tail.hi_fraction < TAIL14_BOUND, tail.fmt(8))
    return rep


# -- dispatch -----------------------------------------------------------------------------

_VERIFIERS = {
    "b5": verify_b5,
    "fc": verify_fc,
    "BB": verify_bb,
    "H7b": verify_h7b,
    "mono11": verify_mono11,
    "delta1": verify_delta1,
    "delta_odd": verify_delta_odd,
    "tail14": verify_tail14,
}


def verify_lemma(lemma_id: str, prec: int = DEFAULT_PRECISION, max_points: int = 64) -> LemmaReport:
    if lemma_id not in _VERIFIERS:
        raise KeyError(f"unknown lemma id {lemma_id!r}; choose from {', '.join(LEMMA_IDS)}")
    if lemma_id == "BB":
        return verify_bb(prec, max_points)
    return _VERIFIERS[lemma_id](prec)


REPORT_IDS = ("constants", "h-bounds", "h-certificates") + LEMMA_IDS


@lru_cache(maxsize=None)
def run_report(report_id: str, prec: int = DEFAULT_PRECISION, max_points: int = 64) -> LemmaReport:
    """Any named report: a lemma id, or one of constants, h-bounds, h-certificates."""
    from .hcert import verify_h_certificates
    if report_id == "constants":
        return bounds.constants_report(prec)
    if report_id == "h-bounds":
        return bounds.h_lower_bounds(prec)
    if report_id == "h-certificates":
        return verify_h_certificates(max_points, prec)
    return verify_lemma(report_id, prec, max_points)
