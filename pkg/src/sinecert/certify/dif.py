"""Point-chain certificates for g1 >= g2 with g1, g2 monotone in the same
direction, plus their text serialization and an independent checker."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..interval import DEFAULT_PRECISION, DomainError, Interval, exact_decimal
from .expr import ExprError, parse
from .monotone import INCREASING, MonotoneFn, Verdict, verify_monotone

FORMAT_TAG = "sinecert-dif-certificate"
FORMAT_VERSION = 1
MARGIN = Fraction(1, 2**20)
BISECT_DEPTH = 60


class CertificationError(ArithmeticError):
    def __init__(self, message: str, where: Fraction | None = None):
        super().__init__(message)
        self.where = where


class CertificateParseError(ValueError):
    pass


@dataclass(frozen=True)
class Link:
    t0: Fraction
    t1: Fraction
    g1: Interval        # g1(t0) when increasing, g1(t1) when decreasing
    g2: Interval        # g2(t1) when increasing, g2(t0) when decreasing
    diff: Interval


@dataclass(frozen=True)
class DifCertificate:
    g1: MonotoneFn
    g2: MonotoneFn
    chain: tuple
    links: tuple
    prec: int
    monotonicity: str = "declared"
    label: str = ""

    @property
    def direction(self) -> str:
        return self.g1.direction

    @property
    def points(self) -> int:
        return len(self.chain)


@dataclass
class CheckResult:
    passed: bool
    problems: list = field(default_factory=list)

    def __bool__(self):
        return self.passed


def _pt(t: Fraction, prec: int) -> Interval:
    return Interval(t, prec=prec)


def link_values(g1: MonotoneFn, g2: MonotoneFn, t0: Fraction, t1: Fraction, prec: int):
    """(g1 value, g2 value, difference) that the link t0 -> t1 must make positive."""
    if g1.direction == INCREASING:
        a = g1.expr.eval(_pt(t0, prec), prec)
        b = g2.expr.eval(_pt(t1, prec), prec)
    else:
        a = g1.expr.eval(_pt(t1, prec), prec)
        b = g2.expr.eval(_pt(t0, prec), prec)
    return a, b, a - b


def _check_pair(g1: MonotoneFn, g2: MonotoneFn) -> None:
    if g1.direction != g2.direction:
        raise ValueError("g1 and g2 must share a direction")
    if (g1.lo, g1.hi) != (g2.lo, g2.hi):
        raise ValueError("g1 and g2 must share a domain")


def dif_certify(g1: MonotoneFn, g2: MonotoneFn, max_points: int = 64,
                prec: int = DEFAULT_PRECISION, label: str = "",
                check_monotone: bool = True) -> DifCertificate:
    """Greedy chain: from each point jump as far as the link still verifies."""
    _check_pair(g1, g2)
    lo, hi = g1.lo, g1.hi
    min_step = (hi - lo) / 2**50
    chain = [lo]
    links = []

    def ok(t0, t1):
        try:
            a, b, d = link_values(g1, g2, t0, t1, prec)
        except DomainError:
            return False, None
        scale = max(abs(a.lo_fraction), abs(b.hi_fraction), abs(a.hi_fraction))
        return d.lo_fraction > MARGIN * scale, (a, b, d)

    t = lo
    while t < hi:
        if len(chain) >= max_points:
            raise CertificationError(f"{label or 'dif'}: more than {max_points} points needed "
                                     f"(stuck near {float(t):.6g})", t)
        good, vals = ok(t, hi)
        if good:
            nxt = hi
        else:
            a, b = t, hi
            good_a, vals = ok(t, t + min_step)
            if not good_a:
                raise CertificationError(f"{label or 'dif'}: no progress at {float(t):.6g}", t)
            a = t + min_step
            for _ in range(BISECT_DEPTH):
                mid = (a + b) / 2
                g, v = ok(t, mid)
                if g:
                    a, vals = mid, v
                else:
                    b = mid
            nxt = _shorten(a, t, lambda s: ok(t, s)[0])
            vals = ok(t, nxt)[1]
        links.append(Link(t, nxt, *vals))
        chain.append(nxt)
        t = nxt

    mono = "declared"
    if check_monotone:
        v1 = verify_monotone(g1, prec=prec)
        v2 = verify_monotone(g2, prec=prec)
        if v1 is Verdict.FAIL or v2 is Verdict.FAIL:
            raise CertificationError(f"{label or 'dif'}: declared direction contradicted")
        mono = "certified" if (v1 and v2) else "declared"
    return DifCertificate(g1, g2, tuple(chain), tuple(links), prec, mono, label)


def _shorten(t: Fraction, floor: Fraction, good) -> Fraction:
    """Round ``t`` down to a short binary fraction, giving up at most 1/8 of the step."""
    keep = floor + (t - floor) * 7 / 8
    for bits in range(4, 64):
        q = Fraction(int(t * 2**bits), 2**bits)
        if q > keep and good(q):
            return q
    return t


def certificate_from_chain(g1: MonotoneFn, g2: MonotoneFn, chain, prec: int = DEFAULT_PRECISION,
                           label: str = "") -> DifCertificate:
    """Wrap a user supplied chain (e.g. a published one) for checking."""
    chain = tuple(Fraction(t) for t in chain)
    links = []
    for t0, t1 in zip(chain, chain[1:]):
        links.append(Link(t0, t1, *link_values(g1, g2, t0, t1, prec)))
    return DifCertificate(g1, g2, chain, tuple(links), prec, "declared", label)


def check_certificate(cert: DifCertificate, prec: int | None = None) -> CheckResult:
    """Re-evaluate every link from scratch.

    Passes iff the chain is strictly increasing, spans the domain, every
    difference has a positive lower bound and every recorded enclosure agrees
    with the recomputation.
    """
    prec = prec or cert.prec
    res = CheckResult(True)

    def bad(msg):
        res.passed = False
        res.problems.append(msg)

    g1, g2 = cert.g1, cert.g2
    try:
        _check_pair(g1, g2)
    except ValueError as exc:
        bad(str(exc))
        return res
    chain = cert.chain
    if len(chain) < 2:
        bad("chain has fewer than two points")
        return res
    if chain[0] != g1.lo or chain[-1] != g1.hi:
        bad(f"chain [{chain[0]}, {chain[-1]}] does not span the domain [{g1.lo}, {g1.hi}]")
    if any(b <= a for a, b in zip(chain, chain[1:])):
        bad("chain is not strictly increasing")
    if len(cert.links) != len(chain) - 1:
        bad(f"{len(cert.links)} link records for {len(chain)} points")
    for i, (t0, t1) in enumerate(zip(chain, chain[1:])):
        try:
            a, b, d = link_values(g1, g2, t0, t1, prec)
        except DomainError as exc:
            bad(f"link {i}: {exc}")
            continue
        if not d.is_positive():
            bad(f"link {i} [{t0}, {t1}]: difference {d} is not positive")
        if i < len(cert.links):
            rec = cert.links[i]
            if (rec.t0, rec.t1) != (t0, t1):
                bad(f"link {i}: endpoints disagree with the chain")
            if prec == cert.prec and (rec.g1 != a or rec.g2 != b or rec.diff.raw[0] != d.raw[0]):
                bad(f"link {i}: recorded enclosures differ from recomputation")
            elif prec != cert.prec and not (rec.diff.lo_fraction <= d.hi_fraction):
                bad(f"link {i}: recorded difference exceeds recomputation")
    return res


# -- text format ---------------------------------------------------------------

def format_rational(t) -> str:
    """Exact rational as a terminating decimal when possible, else p/q."""
    t = Fraction(t)
    d = t.denominator
    while d % 2 == 0:
        d //= 2
    while d % 5 == 0:
        d //= 5
    if d != 1:
        return f"{t.numerator}/{t.denominator}"
    if t.denominator == 1:
        return str(t.numerator)
    k = 0
    while (t * 10**k).denominator != 1:
        k += 1
    s = str(abs((t * 10**k).numerator)).rjust(k + 1, "0")
    return ("-" if t < 0 else "") + s[:-k] + "." + s[-k:]


_q = format_rational


def _enc(v: Interval) -> str:
    return f"[{exact_decimal(v.raw[0])}, {exact_decimal(v.raw[1])}]"


def dumps(cert: DifCertificate) -> str:
    lines = [
        f"# {FORMAT_TAG} v{FORMAT_VERSION}",
        f"label {cert.label or '-'}",
        f"direction {cert.direction}",
        f"domain {_q(cert.g1.lo)} {_q(cert.g1.hi)}",
        f"precision {cert.prec}",
        f"g1 {cert.g1.expr}",
        f"g2 {cert.g2.expr}",
        f"monotonicity {cert.monotonicity}",
        f"points {len(cert.chain)}",
    ]
    for ln in cert.links:
        lines.append(f"link {_q(ln.t0)} {_q(ln.t1)} g1={_enc(ln.g1)} g2={_enc(ln.g2)} "
                     f"diff>={exact_decimal(ln.diff.raw[0])}")
    lines.append("end")
    return "\n".join(lines) + "\n"


_LINK = re.compile(r"^link (\S+) (\S+) g1=\[(\S+), (\S+)\] g2=\[(\S+), (\S+)\] diff>=(\S+)$")


def loads(text: str) -> DifCertificate:
    lines = [ln.rstrip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith(f"# {FORMAT_TAG}"):
        raise CertificateParseError("missing certificate header")
    if lines[-1] != "end":
        raise CertificateParseError("truncated certificate (no 'end' line)")
    head = {}
    links = []
    try:
        for ln in lines[1:-1]:
            if ln.startswith("link "):
                m = _LINK.match(ln)
                if not m:
                    raise CertificateParseError(f"malformed link record: {ln[:60]}")
                links.append(m.groups())
                continue
            key, _, val = ln.partition(" ")
            head[key] = val
        for key in ("direction", "domain", "precision", "g1", "g2", "points"):
            if key not in head:
                raise CertificateParseError(f"missing header field {key!r}")
        prec = int(head["precision"])
        lo, hi = (Fraction(v) for v in head["domain"].split())
        g1 = MonotoneFn(parse(head["g1"]), head["direction"], lo, hi)
        g2 = MonotoneFn(parse(head["g2"]), head["direction"], lo, hi)
        npts = int(head["points"])
        if len(links) != npts - 1:
            raise CertificateParseError(f"expected {npts - 1} links, found {len(links)}")
        recs = []
        for t0, t1, a0, a1, b0, b1, dl in links:
            g1v = Interval(Fraction(a0), Fraction(a1), prec=prec)
            g2v = Interval(Fraction(b0), Fraction(b1), prec=prec)
            d = Interval(Fraction(dl), prec=prec)
            recs.append(Link(Fraction(t0), Fraction(t1), g1v, g2v, d))
    except CertificateParseError:
        raise
    except (ValueError, ZeroDivisionError, ExprError) as exc:
        raise CertificateParseError(str(exc)) from None
    chain = tuple([recs[0].t0] + [r.t1 for r in recs]) if recs else ()
    label = head.get("label", "-")
    return DifCertificate(g1, g2, chain, tuple(recs), prec, head.get("monotonicity", "declared"),
                          "" if label == "-" else label)
