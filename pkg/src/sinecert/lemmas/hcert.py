"""The ten monotone-difference certificates behind the h-function lemma:
-h_i'(y; b1) > 0 (so each h_i decreases in y) and dh_i(y; 1)/dbeta >= 0
(so each h_i increases in beta), for i = 1..5, on y in [0, 1/48]."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..certify.dif import CertificationError, certificate_from_chain, check_certificate, dif_certify
from ..certify.monotone import INCREASING, MonotoneFn
from ..decompose import h_family
from ..interval import DEFAULT_PRECISION, Interval, beta1, exp
from .report import LemmaReport

Y_MAX = Fraction(1, 48)

# P_k(y) = (1 - (k^2 - 1) y) / k
P = {2: "((1 - 3*x)/2)", 3: "((1 - 8*x)/3)", 4: "((1 - 15*x)/4)", 5: "((1 - 24*x)/5)"}

# published chain for the h1 slope target
PUBLISHED_H1_CHAIN = (Fraction(0), Fraction("0.0075"), Fraction("0.0181"), Y_MAX)


def _pw(k: int) -> str:
    return f"{P[k]}**(b1 - 1)"


def _tlt(k: int) -> str:
    return f"{P[k]}*ln{P[k]}"


@dataclass(frozen=True)
class HTarget:
    label: str
    g1: str
    g2: str
    claim: str


TARGETS = (
    HTarget("h1", f"72*{_pw(5)}", f"75*{_pw(4)}", "-5 h1'(y;b1)/b1 > 0"),
    HTarget("h2", f"(3/2)*{_pw(2)} + (48/5)*{_pw(5)}", f"(45/4)*{_pw(4)}", "-h2'(y;b1)/b1 > 0"),
    HTarget("h3", f"(8/3)*{_pw(3)} + (24/5)*{_pw(5)}", f"(15/2)*{_pw(4)}", "-h3'(y;b1)/b1 > 0"),
    HTarget("h4", f"(8/3)*{_pw(3)}", f"3*{_pw(2)}", "-h4'(y;b1)/b1 > 0"),
    HTarget("h5", f"(3/2)*{_pw(2)} + (15/4)*{_pw(4)}", f"(16/3)*{_pw(3)}", "-h5'(y;b1)/b1 > 0"),
    HTarget("dh1", f"3*{_tlt(5)}", f"4*{_tlt(4)}", "dh1(y;1)/dbeta >= 0"),
    HTarget("dh2", f"2*{_tlt(5)}", f"3*{_tlt(4)} - {_tlt(2)}", "dh2(y;1)/dbeta >= 0"),
    HTarget("dh3", f"{_tlt(3)} + {_tlt(5)}", f"2*{_tlt(4)}", "dh3(y;1)/dbeta >= 0"),
    HTarget("dh4", f"(-2)*{_tlt(2)} + {_tlt(3)}", "0*x", "dh4(y;1)/dbeta >= 0"),
    HTarget("dh5", f"{_tlt(4)}", f"2*{_tlt(3)} - {_tlt(2)}", "dh5(y;1)/dbeta >= 0"),
)


def target_functions(t: HTarget):
    g1 = MonotoneFn(t.g1, INCREASING, 0, Y_MAX)
    g2 = MonotoneFn(t.g2, INCREASING, 0, Y_MAX)
    return g1, g2


def certify_target(t: HTarget, max_points: int = 64, prec: int = DEFAULT_PRECISION):
    g1, g2 = target_functions(t)
    return dif_certify(g1, g2, max_points=max_points, prec=prec, label=t.label)


def verify_h_certificates(max_points: int = 64, prec: int = DEFAULT_PRECISION) -> LemmaReport:
    rep = LemmaReport("h-certificates", "h_i(y;beta) positive, decreasing in y, increasing in beta")
    for t in TARGETS:
        try:
            cert = certify_target(t, max_points, prec)
        except CertificationError as exc:
            rep.add(f"{t.label}: {t.claim}", "dif", False, str(exc))
            continue
        checked = check_certificate(cert)
        rep.certificates.append(cert)
        chain = ", ".join(str(c) for c in cert.chain)
        rep.add(f"{t.label}: {t.claim}", "dif", bool(checked),
                f"{cert.points} points {{{chain}}}, monotonicity {cert.monotonicity}")

    g1, g2 = target_functions(TARGETS[0])
    published = certificate_from_chain(g1, g2, PUBLISHED_H1_CHAIN, prec, "h1-published-chain")
    res = check_certificate(published)
    rep.add("published h1 chain {0, 0.0075, 0.0181, 1/48} checks", "dif", bool(res),
            "; ".join(res.problems))
    coarse = certificate_from_chain(g1, g2, (Fraction(0), Y_MAX), prec, "h1-single-link")
    rep.add("single link {0, 1/48} is rejected for h1", "dif", not check_certificate(coarse))

    b1 = beta1(prec)
    fam = h_family(Y_MAX, b1)
    for i, v in enumerate(fam.values(), 1):
        rep.const(f"h{i}(1/48;b1)", v)
    rep.add("h_i(1/48; b1) > 0 for i = 1..5 (so positive on the whole range)", "interval",
            all(v.is_positive() for v in fam.values()))
    fam0 = h_family(0, b1)
    rep.const("h4(0;b1)", fam0.h4)
    rep.add("h4(0; b1) = 1 - 2 (1/2)^b1 + (1/3)^b1 > 0", "interval", fam0.h4.is_positive())

    # range facts that fix the declared monotone directions
    inv_e = exp(Interval(-1, prec=prec))
    p2_lo = Interval((1 - 3 * Y_MAX) / 2, prec=prec)
    rep.add("P2 > 1/e and P3, P4, P5 <= 1/3 < 1/e on [0, 1/48]", "interval",
            p2_lo.certainly_gt(inv_e) and Interval(Fraction(1, 3), prec=prec).certainly_lt(inv_e),
            "t ln t decreases for t < 1/e and increases for t > 1/e; each P_k decreases in y")
    rep.add("each h_i(y; beta) has the power-difference form, so dh_i(y;1)/dbeta >= 0 and "
            "h_i(y; b1) >= 0 give monotone increase on [b1, 1]", "analytic", True,
            "endpoint reduction for lambda A^beta - (lambda+mu) B^beta + mu C^beta")
    return rep
