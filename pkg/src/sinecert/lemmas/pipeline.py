"""Replay of the positivity argument for one (n, beta).

S^- is shown nonnegative on three x ranges:

  region 1  [0.75, pi]     comparison bound with c_2 <= 0.662 and lemma b5
  region 2  [x0/n, 0.75]   H^-/x bounded below at the n0 = 7 anchor, T^- >= -a_{n-1}/(2 cos(x/2))
  region 3  [0, 2.5/n]     even n: tau^-_{n-1} >= 0; odd n: the delta sums against an anchor

with S^- >= H^- + T^- once K passes Fejer's test.  Every inequality is
re-evaluated for the given instance; the uniform constants of the general
argument are recorded next to the instance values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..certify.criteria import fejer_check
from ..certify.dif import format_rational as dec
from ..certify.monotone import Verdict
from ..decompose import SplitError, _split, h_combos, k_combos
from ..interval import Interval, beta1, cos, exact_decimal, pi, zero
from ..sinepoly import CoefficientSequence
from . import bounds
from .bounds import ANCHOR_RANGE, FIN_ADDENDS, PRINTED, STAGE2B_END, TAIL14_ROUNDED_UP, TWO_SUMMAND_BOUND
from .report import Step

F = Fraction
FORMAT_TAG = "sinecert-pipeline-trace"
FORMAT_VERSION = 1

PROVED = "proved"
NOT_PROVED = "not proved"

FULLY_CONVEX = "fully-convex"
EVEN = "even"
TWO_SUMMAND = "two-summand"
TEN_OR_FEWER = "ten-or-fewer"
TELESCOPED = "telescoped"
DIRECT = "direct"
BRANCHES = (FULLY_CONVEX, EVEN, TWO_SUMMAND, TEN_OR_FEWER, TELESCOPED, DIRECT)

REGION1 = "region1"
REGION2 = "region2"
REGION3 = "region3"

# printed lower bounds of H^-(n0, b1)/x on (0, x_end], checked against enclosures
ANCHOR_H = {
    (7, F(3, 4)): F("0.2232"),
    (7, STAGE2B_END): F("0.2285"),
    (15, ANCHOR_RANGE[15]): F("0.248"),
    # the printed 0.250772629 is 3e-10 above the enclosure; one unit lower is used
    (45, ANCHOR_RANGE[45]): F("0.250772628"),
}


@dataclass
class Region:
    name: str
    span: str
    bound: str = ""
    steps: list = field(default_factory=list)

    def add(self, name: str, kind: str, passed, detail: str = "", value=None) -> Step:
        st = Step(name, kind, None if passed is None else bool(passed), detail, value)
        self.steps.append(st)
        return st

    @property
    def verdict(self) -> str:
        return PROVED if self.steps and all(s.passed is True for s in self.steps) else NOT_PROVED


@dataclass
class PipelineTrace:
    n: int
    beta: Interval
    beta_label: str
    m: int | None = None
    summands: int | None = None
    branch: str = ""
    anchor: int | None = None
    steps: list = field(default_factory=list)
    regions: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, name: str, kind: str, passed, detail: str = "", value=None) -> Step:
        st = Step(name, kind, None if passed is None else bool(passed), detail, value)
        self.steps.append(st)
        return st

    def region(self, name: str) -> Region | None:
        for r in self.regions:
            if r.name == name:
                return r
        return None

    @property
    def verdict(self) -> str:
        pre = all(s.passed is True for s in self.steps)
        names = {r.name for r in self.regions}
        full = {REGION1, REGION2, REGION3} <= names
        return PROVED if pre and full and all(r.verdict == PROVED for r in self.regions) else NOT_PROVED

    @property
    def proved(self) -> bool:
        return self.verdict == PROVED

    def failures(self) -> list:
        out = [("prerequisites", s) for s in self.steps if s.passed is not True]
        for r in self.regions:
            out += [(r.name, s) for s in r.steps if s.passed is not True]
        return out

    # -- output ---------------------------------------------------------------

    def to_text(self) -> str:
        out = [f"# {FORMAT_TAG} v{FORMAT_VERSION}",
               f"n {self.n}",
               f"beta {self.beta_label} {_enc(self.beta)}",
               f"split m={self.m} summands={self.summands}",
               f"branch {self.branch}",
               f"anchor {self.anchor if self.anchor is not None else '-'}",
               f"verdict {self.verdict}"]
        for s in self.steps:
            out.append(_step_line("step", s))
        for r in self.regions:
            out.append(f"region {r.name} {r.verdict} {r.span}" + (f" :: {r.bound}" if r.bound else ""))
            for s in r.steps:
                out.append(_step_line("  step", s))
        for n in self.notes:
            out.append(f"note {n}")
        out.append("end")
        return "\n".join(out) + "\n"

    def to_dict(self) -> dict:
        def st(s):
            return {"name": s.name, "kind": s.kind, "verdict": s.verdict, "detail": s.detail,
                    "value": None if s.value is None else _pair(s.value)}
        return {
            "n": self.n,
            "beta": {"label": self.beta_label, "enclosure": _pair(self.beta)},
            "m": self.m,
            "summands": self.summands,
            "branch": self.branch,
            "anchor": self.anchor,
            "verdict": self.verdict,
            "steps": [st(s) for s in self.steps],
            "regions": [{"name": r.name, "span": r.span, "bound": r.bound, "verdict": r.verdict,
                         "steps": [st(s) for s in r.steps]} for r in self.regions],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _enc(v: Interval) -> str:
    return f"[{exact_decimal(v.raw[0])}, {exact_decimal(v.raw[1])}]"


def _pair(v: Interval) -> list:
    return [exact_decimal(v.raw[0]), exact_decimal(v.raw[1])]


def _step_line(prefix: str, s: Step) -> str:
    line = f"{prefix} {s.verdict} {s.kind} {s.name}"
    if s.value is not None:
        line += f" value={_enc(s.value)}"
    if s.detail:
        line += f" :: {s.detail}"
    return line


# -- shared, instance independent facts --------------------------------------------

@lru_cache(maxsize=None)
def _anchor_h(n0: int, x_end: Fraction, prec: int):
    """(printed lower bound, enclosure, concavity ok) for H^-(n0, b1)/x on (0, x_end]."""
    v, conc = bounds.anchor_bounds(prec)[(n0, x_end)]
    return ANCHOR_H[(n0, x_end)], v, conc


@lru_cache(maxsize=None)
def _anchor_seq(n0: int, prec: int) -> CoefficientSequence:
    return CoefficientSequence.build(n0, beta1(prec), beta1)


@lru_cache(maxsize=None)
def _b5_ok(prec: int) -> bool:
    from .suite import verify_b5
    return verify_b5(prec).ok


def _up(v: Interval, digits: int = 8) -> str:
    """Decimal upper bound of an enclosure, rounded up."""
    q = -((-v.hi_fraction * 10**digits) // 1)
    return dec(Fraction(q, 10**digits))


def _anchor_step(reg: Region, n0: int, x_end: Fraction, prec: int) -> Interval:
    h, v, conc = _anchor_h(n0, x_end, prec)
    reg.add(f"H^-({n0},b1) concave on [0, {dec(x_end)}], so H^-({n0},b1)/x decreases there", "interval", conc)
    reg.add(f"H^-({n0},b1)/x >= {dec(h)} on (0, {dec(x_end)}]", "interval", v.lo_fraction >= h,
            f"value at the right end {v.fmt(12)}", v)
    return Interval(h, prec=prec)


def _h_dominates(trace: PipelineTrace, seq: CoefficientSequence, n0: int, prec: int) -> None:
    """H(n, beta) - H(n0, b1) passes Fejer's test, so H^-(n, beta) >= H^-(n0, b1)."""
    b1 = beta1(prec)
    if seq.n == n0 and seq.beta == b1:
        trace.add(f"H(n, beta) = H({n0}, b1): no comparison needed", "exact", True)
        return
    anc = _anchor_seq(n0, prec)
    diff = [c.eval(seq) - c.eval(anc) for c in h_combos()]
    v = fejer_check(diff)
    trace.add(f"H(n, beta) - H({n0}, b1) has a convex appended-zero coefficient sequence", "interval",
              v is Verdict.PASS if v is not Verdict.INCONCLUSIVE else None,
              ", ".join(d.fmt(8) for d in diff))


def _hdec(n0: int, x_end: Fraction) -> str:
    return dec(ANCHOR_H[(n0, x_end)])


# -- the replay -----------------------------------------------------------------------

def pipeline(n: int, beta: Interval, prec: int | None = None, beta_label: str | None = None) -> PipelineTrace:
    if n < 7:
        raise ValueError(f"the pipeline covers n >= 7, got {n}")
    prec = prec or beta.prec
    if beta.prec != prec:
        beta = Interval(beta.lo_fraction, beta.hi_fraction, prec=prec)
    b1 = beta1(prec)
    label = beta_label or beta.fmt(12)
    trace = PipelineTrace(n, beta, label)

    trace.add("beta >= b1", "interval", not beta.certainly_lt(b1) and (beta == b1 or beta.certainly_ge(b1)),
              f"beta = {beta.fmt(12)}")
    seq = CoefficientSequence.build(n, beta, beta1 if beta == b1 else None)
    try:
        m, seq = _split(seq)
    except SplitError as exc:
        trace.add("shared-endpoint split of the coefficient sequence", "interval", None, str(exc))
        trace.branch = "undecided"
        return trace
    trace.m, trace.summands = m, n - m

    # fully convex: Fejer on a_1..a_{n-1} settles every x at once
    if m == n:
        trace.branch = FULLY_CONVEX
        v = fejer_check(seq.values())
        ok = v is Verdict.PASS
        trace.add("a_1, .., a_{n-1}, 0 is convex", "interval", ok, f"Fejer verdict {v}")
        for name, span in ((REGION1, "[0.75, pi]"), (REGION2, f"[2.5/{n}, 0.75]"), (REGION3, f"[0, 2.5/{n}]")):
            reg = Region(name, span, "S >= 0 on [0, pi] by Fejer's criterion")
            reg.add("covered by the Fejer step", "interval", ok)
            trace.regions.append(reg)
        return trace

    _prerequisites(trace, seq, m, prec)
    trace.regions.append(_region1(seq, prec))
    trace.regions.append(_region2(trace, seq, prec))
    trace.regions.append(_region3(trace, seq, m, prec))
    return trace


def _prerequisites(trace: PipelineTrace, seq: CoefficientSequence, m: int, prec: int) -> None:
    n = seq.n
    dec_ok = all(seq.d(k).is_positive() for k in range(1, n))
    trace.add("a_k > 0 and strictly decreasing", "interval", dec_ok and seq[n - 1].is_positive())
    a2 = seq[2]
    trace.add("a_2 <= 0.662", "interval", a2.hi_fraction <= PRINTED["a2 bound"], a2.fmt(10), a2)
    v = fejer_check(k_combos(m), seq)
    trace.add(f"K (coefficients a_k - a_{m} minus H) passes Fejer's test, so S >= H + T", "interval",
              v is Verdict.PASS if v is not Verdict.INCONCLUSIVE else None, f"m = {m}, verdict {v}")
    d = [seq.d(k) for k in range(m, n)]
    mono = all((d[i + 1] - d[i]).is_nonnegative() for i in range(len(d) - 1))
    trace.add(f"d_k > 0 and nondecreasing for k = {m}..{n - 1}", "interval",
              mono and all(x.is_positive() for x in d))
    na = seq[n - 1] * n
    trace.add("n a_{n-1} <= 1.105", "interval", na.hi_fraction <= PRINTED["n a_{n-1} bound"], na.fmt(10), na)
    _h_dominates(trace, seq, 7, prec)


def _region1(seq: CoefficientSequence, prec: int) -> Region:
    reg = Region(REGION1, "[0.75, pi]",
                 "S^- >= (s(1/2) + s(3/2) - a_2 (1 + s(3/2)))/(2 c(1/2)) >= (s(1/2) + 0.338 s(3/2) - 0.662)/(2 c(1/2))")
    reg.add("comparison bound for positive decreasing coefficients with c_1 = 1, c_2 = a_2 <= 0.662",
            "interval", seq[2].hi_fraction <= PRINTED["a2 bound"] and seq[2].certainly_lt(seq[1]),
            f"a_2 = {seq[2].fmt(10)}")
    reg.add("s(1/2) + 0.338 s(3/2) - 0.662 >= 0 on [0.75, pi] (lemma b5)", "sturm", _b5_ok(prec))
    return reg


def _region2(trace: PipelineTrace, seq: CoefficientSequence, prec: int) -> Region:
    n = seq.n
    an = seq[n - 1]
    reg = Region(REGION2, "[x0, 0.75]",
                 "S^- >= h x - a_{n-1}/(2 cos(x/2)) with h from the n0 = 7 anchor")
    # stage a: h = 0.2232 on (0, 0.75]
    ha = _anchor_step(reg, 7, F(3, 4), prec)
    xa = an / (ha * 2 * cos(Interval(F(3, 8), prec=prec)))
    # stage b: h = 0.2285 on (0, 2.67/7]
    hb = _anchor_step(reg, 7, STAGE2B_END, prec)
    xb = an / (hb * 2 * cos(Interval(STAGE2B_END / 2, prec=prec)))
    c = bounds.thresholds(prec)
    reg.add("T^- >= a_{n-1} min(tau^-_{n-1}, 0) >= -a_{n-1}/(2 cos(x/2))", "analytic", True,
            "d_k positive nondecreasing, tau^-_{k-1} + tau^-_k >= 0, s(1/2) >= 0")
    reg.add(f"stage a: S^- >= 0 on [{_up(xa * n)}/n, 0.75] (x0 = a_(n-1)/(2 (0.2232) cos 0.375))", "interval",
            xa.hi_fraction < F(3, 4), f"n x0 = {(xa * n).fmt(10)}, uniform C1 = {c['C1'].fmt(10)}", xa * n)
    reg.add(f"stage b: S^- >= 0 on [{_up(xb * n)}/n, 2.67/7]; stage a starts inside it", "interval",
            xa.hi_fraction <= STAGE2B_END, f"n x0 = {(xb * n).fmt(10)}, uniform C2 = {c['C2'].fmt(10)}", xb * n)
    reg.add("region 3 reaches the stage b start: x0 <= 2.5/n", "interval",
            (xb * n).hi_fraction <= F(5, 2), f"n x0 = {(xb * n).fmt(10)}")
    reg.span = f"[{_up(xb * n)}/{n}, 0.75]"
    return reg


def _region3(trace: PipelineTrace, seq: CoefficientSequence, m: int, prec: int) -> Region:
    n = seq.n
    reg = Region(REGION3, f"[0, 2.5/{n}]")
    if n % 2 == 0:
        trace.branch = EVEN
        reg.bound = "tau^-_{n-1} >= 0 on [0, pi/n], so T^- >= 0 and S^- >= H^- >= 0"
        reg.add("tau^-_{n-1} = s(n/2) c((n-1)/2)/c(1/2) >= 0 on [0, pi/n] for even n", "analytic", True)
        p = pi(prec)
        reg.add("2.5 < pi, so [0, 2.5/n] lies inside [0, pi/n]", "interval", p.certainly_gt(F(5, 2)))
        _anchor_step(reg, 7, STAGE2B_END, prec)
        return reg

    c = n - m
    reg.add(f"m = {m} odd and n - 1 even, so the paired tau bound applies", "exact", m % 2 == 1)
    tdm = zero(prec)
    for k in range(1, n - m, 2):
        tdm = tdm + seq.delta(k) * (n - k)
    if c == 2:
        trace.branch, n0 = TWO_SUMMAND, 7
    elif c <= 10:
        trace.branch, n0 = TEN_OR_FEWER, (15 if n >= 15 else 7)
    elif n >= 45:
        trace.branch, n0 = TELESCOPED, 45
    else:
        trace.branch, n0 = DIRECT, 15
    trace.anchor = n0
    x_end = STAGE2B_END if n0 == 7 else ANCHOR_RANGE[n0]
    if n0 != 7:
        _h_dominates(trace, seq, n0, prec)
    reg.add(f"2.5/n <= {dec(x_end)}", "exact", F(5, 2) / n <= x_end)
    h = _anchor_step(reg, n0, x_end, prec)

    if trace.branch == TELESCOPED:
        reg.bound = ("2|T^-|/x <= (n-11)/2 (a_{n-10} - a_{n-9}) + sum_{k=1,3,..,9} (n-k) delta_k "
                     f"< 2 x {dec(ANCHOR_H[(45, ANCHOR_RANGE[45])])}")
        mono = all((seq.delta(k + 1) - seq.delta(k)).is_nonpositive() for k in range(10, n - m - 1))
        reg.add(f"delta_k nonincreasing for k = 10..{n - m - 1} (pairs odd with even indices)", "interval", mono)
        fin = (seq[n - 10] - seq[n - 9]) * F(n - 11, 2)
        for k in (1, 3, 5, 7, 9):
            fin = fin + seq.delta(k) * (n - k)
        reg.add(f"(fin1 sum)/2 < {_hdec(n0, x_end)}", "interval", (fin / 2).certainly_lt(h),
                f"(fin1 sum)/2 = {(fin / 2).fmt(10)}, direct delta sum/2 = {(tdm / 2).fmt(10)}", fin / 2)
        total = sum(FIN_ADDENDS) - FIN_ADDENDS[0] + TAIL14_ROUNDED_UP / 2
        trace.notes.append(f"uniform route: 0.1636/2 + ... = 0.492444 as printed; with 0.16365 the sum is "
                           f"{dec(total)} < 2 x 0.250772628")
    else:
        ks = ", ".join(str(k) for k in range(1, n - m, 2))
        reg.bound = f"|T^-|/x <= (1/2) sum_(k odd <= {n - m - 1}) (n-k) delta_k < H^-/x"
        reg.add(f"(sum of (n-k) delta_k over k = {ks})/2 < {_hdec(n0, x_end)}", "interval",
                (tdm / 2).certainly_lt(h), f"value {(tdm / 2).fmt(10)}", tdm / 2)
        if trace.branch == TWO_SUMMAND:
            trace.notes.append(f"uniform route: theta(12)/2 <= {dec(TWO_SUMMAND_BOUND)} < 0.2285")
        elif trace.branch == TEN_OR_FEWER and n0 == 15:
            trace.notes.append("uniform route: 0.19605 + 0.0206 + 0.009 + 0.005171 + 0.003451 = 0.234272 < 0.248")
    return reg
