"""The seven acceptance criteria, each at its stated tolerance and time budget.

Every criterion prints one PASS/FAIL line (also collected into the pytest
terminal summary).  Run directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import checks  # noqa: E402
from sinecert.certify.dif import certificate_from_chain, check_certificate  # noqa: E402
from sinecert.decompose import x_star_squared  # noqa: E402
from sinecert.interval import Interval, beta1, beta2  # noqa: E402
from sinecert.lemmas import bounds  # noqa: E402
from sinecert.lemmas.hcert import PUBLISHED_H1_CHAIN, TARGETS, target_functions, verify_h_certificates  # noqa: E402
from sinecert.lemmas.oracle import scan  # noqa: E402
from sinecert.lemmas.pipeline import EVEN, TELESCOPED, TEN_OR_FEWER, TWO_SUMMAND, pipeline  # noqa: E402
from sinecert.lemmas.suite import verify_bb, verify_b5, verify_fc, verify_h7b  # noqa: E402
from sinecert.sinepoly import CoefficientSequence, theta  # noqa: E402

F = Fraction
PREC = 128


def _emit(num: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {num} {'PASS' if ok else 'FAIL'} {title}: {detail}"
    print(line)
    try:
        from conftest import ACCEPTANCE_LINES
        ACCEPTANCE_LINES.append(line)
    except ImportError:
        pass


def _within(v: Interval, target, tol) -> bool:
    t, e = F(target), F(tol)
    return abs(v.lo_fraction - t) <= e and abs(v.hi_fraction - t) <= e


# -- 1 ---------------------------------------------------------------------------

def criterion_1():
    t0 = time.perf_counter()
    b1, b2 = beta1(PREC), beta2(PREC)
    conc = bounds.anchor_concavity(7, F(3, 4), PREC)
    th = bounds.thresholds(PREC)
    items = [
        ("beta1 = 0.59592 +- 1e-5", _within(b1, "0.59592", "1e-5")),
        ("beta2 = 0.8714162659 +- 1e-9", _within(b2, "0.8714162659", "1e-9")),
        ("H7/x at 0.75 = 0.2232352723 +- 1e-9",
         _within(bounds.h_minus_over_x(7, F(3, 4), PREC), "0.2232352723", "1e-9")),
        ("C1 = 2.660223693 +- 1e-6", _within(th["C1"], "2.660223693", "1e-6")),
        ("C2 = 2.4602482 +- 1e-6", _within(th["C2"], "2.4602482", "1e-6")),
        # the printed x_* value is the radicand (sqrt(5-4b) + b - 2)/(1 - b)
        ("x_*(beta1) = 0.5281747 +- 1e-6", _within(x_star_squared(b1), "0.5281747", "1e-6")),
        ("H7b root 0.39281956258689586 +- 1e-12", _within(conc.roots[0], "0.39281956258689586", "1e-12")),
        ("H7b root 0.67755077339437549 +- 1e-12", _within(conc.roots[1], "0.67755077339437549", "1e-12")),
        ("theta(12) < 0.3921", theta(12, b1).certainly_lt(F("0.3921"))),
        ("theta(45) < 0.3428", theta(45, b1).certainly_lt(F("0.3428"))),
        ("0.196 + 0.0206 + 0.009 + 0.005171 + 0.003451 = 0.234222",
         sum(bounds.TEN_SUMMAND_ADDENDS) == F("0.234222")),
        ("0.1636/2 + 0.006902 + 0.010342 + 0.018 + 0.0326 + 0.3428 = 0.492444",
         sum(bounds.FIN_ADDENDS) == F("0.492444")),
    ]
    dt = time.perf_counter() - t0
    failed = [name for name, ok in items if not ok]
    ok = not failed and dt < 60
    detail = f"{len(items) - len(failed)}/{len(items)} constants in {dt:.1f}s"
    if failed:
        detail += f"; failed: {'; '.join(failed)} (C2 recomputes to {th['C2'].fmt(10)})"
    return ok, detail


# -- 2 ---------------------------------------------------------------------------

def criterion_2():
    t0 = time.perf_counter()
    rep = verify_h_certificates(64, PREC)
    certs = rep.certificates
    g1, g2 = target_functions(TARGETS[0])
    pub = certificate_from_chain(g1, g2, PUBLISHED_H1_CHAIN, PREC, "h1-published-chain")
    pub_ok = bool(check_certificate(pub))
    rechecked = all(check_certificate(c) for c in certs)
    dt = time.perf_counter() - t0
    longest = max(c.points for c in certs) if certs else 0
    ok = len(certs) == 10 and longest <= 64 and rechecked and pub_ok and dt < 10
    return ok, (f"{len(certs)}/10 targets certified, longest chain {longest} points, "
                f"published h1 chain {'passes' if pub_ok else 'fails'}, {dt:.1f}s")


# -- 3 ---------------------------------------------------------------------------

STURM_CLAIMS = (
    ("b5", verify_b5, "676X^2 + 676X - 331 > 0 on (0.4, 1)"),
    ("fc", verify_fc, "case 1: g(x;0)"),
    ("fc", verify_fc, "case 2: g(x;1) = 6x^4 - 12x^2 + 6 > 0 on (0.63, 0.99)"),
    ("fc", verify_fc, "case 3:"),
    ("BB", verify_bb, "(1+B)(B - B^2/2 + B^3/3 - B^4/4)^2"),
    ("H7b", verify_h7b, "rational upper envelope of q(X) < 0"),
)


def criterion_3():
    reports = {}
    seen = []
    for lemma, fn, prefix in STURM_CLAIMS:
        rep = reports.setdefault(lemma, fn(PREC))
        steps = [s for s in rep.steps if s.kind == "sturm" and s.name.startswith(prefix)]
        # a passing Sturm step means 0 roots in the open interval and a positive sample
        seen.append((lemma, prefix, bool(steps) and all(s.passed for s in steps)))
    roots = reports["H7b"]
    roots_ok = all(s.passed for s in roots.steps if s.name.startswith("root "))
    failed = [f"{lm}: {p}" for lm, p, ok in seen if not ok]
    ok = not failed and roots_ok
    detail = f"{len(seen) - len(failed)}/{len(seen)} Sturm verdicts, H7b roots {'located' if roots_ok else 'off'}"
    if failed:
        detail += f"; failed: {'; '.join(failed)}"
    return ok, detail


# -- 4 ---------------------------------------------------------------------------

def criterion_4():
    t0 = time.perf_counter()
    bad = []
    branches = {}
    for label, beta in (("beta1", beta1(PREC)), ("1", Interval(1, prec=PREC))):
        for n in range(7, 201):
            tr = pipeline(n, beta, PREC, label)
            branches.setdefault(label, set()).add(tr.branch)
            if not tr.proved:
                bad.append(f"n={n} beta={label}")
    dt = time.perf_counter() - t0
    need = {EVEN, TWO_SUMMAND, TEN_OR_FEWER, TELESCOPED}
    missing = need - branches["beta1"]
    ok = not bad and not missing and dt < 300
    seen = sorted(branches["beta1"] | branches["1"])
    detail = f"{2 * 194 - len(bad)}/{2 * 194} proved, branches {', '.join(seen)}, {dt:.1f}s"
    if bad:
        detail += f"; not proved: {', '.join(bad[:10])}"
    if missing:
        detail += f"; branches never used: {', '.join(sorted(missing))}"
    return ok, detail


# -- 5 ---------------------------------------------------------------------------

def criterion_5():
    t0 = time.perf_counter()
    res = scan(range(2, 201), beta1(PREC), 8192, "beta1")
    neg = [r.n for r in res.rows if r.negative_cells]
    wit = scan(range(3, 4), Interval(F("0.58"), prec=PREC), 8192, "0.58").rows[0].witness
    dt = time.perf_counter() - t0
    near_pi = wit is not None and wit.x > 3 and wit.value.is_negative()
    ok = not neg and near_pi and dt < 120
    wdesc = "none" if wit is None else f"x={float(wit.x):.4f} S<={wit.value.hi_float():.3e}"
    return ok, f"negative cells at n in {neg or 'none'}, beta=0.58 witness {wdesc}, {dt:.1f}s"


# -- 6 ---------------------------------------------------------------------------

def criterion_6():
    b1 = beta1(PREC)
    bad = []
    for n in range(15, 200, 2):
        seq = CoefficientSequence.build(n, b1)
        for k, bound in bounds.ODD_DELTA_BOUNDS.items():
            if not (seq.delta(k) * (n - k)).certainly_lt(bound):
                bad.append(f"(n-{k}) delta_{k} at n={n}")
        if 45 <= n <= 97 and not (seq.delta(3) * (n - 3)).certainly_lt(bounds.DN6_BOUND):
            bad.append(f"dn6 at n={n}")
    total = 4 * len(range(15, 200, 2)) + len(range(45, 98, 2))
    detail = f"{total - len(bad)}/{total} inequalities hold"
    if bad:
        detail += f"; failed: {', '.join(bad[:10])}"
    return not bad, detail


# -- 7 ---------------------------------------------------------------------------

def criterion_7():
    t0 = time.perf_counter()
    suites = (
        ("interval fuzz (1e5 cases)", lambda: checks.interval_fuzz(100_000)),
        ("tau closed vs direct (k <= 64)", lambda: checks.tau_agreement(64)),
        ("S = H + K + T (n <= 200, 32 x each)", lambda: checks.decomposition_identity(range(7, 201), 32)),
        ("d monotone, even count", lambda: checks.split_invariants(range(7, 201))),
        ("summand count monotone in beta", lambda: checks.count_monotone_in_beta(60)),
    )
    failed = []
    for name, fn in suites:
        bad = fn()
        if bad:
            failed.append(f"{name}: {len(bad)} violations, first {bad[0]}")
    dt = time.perf_counter() - t0
    detail = f"{len(suites) - len(failed)}/{len(suites)} suites with zero violations, {dt:.1f}s"
    if failed:
        detail += f"; {'; '.join(failed)}"
    return not failed, detail


CRITERIA = (
    (1, "constant reproduction", criterion_1),
    (2, "certificate suite", criterion_2),
    (3, "Sturm suite", criterion_3),
    (4, "pipeline replay", criterion_4),
    (5, "oracle consistency", criterion_5),
    (6, "delta-bound table", criterion_6),
    (7, "property suites", criterion_7),
)


@pytest.mark.slow
@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_acceptance(num, title, fn):
    ok, detail = fn()
    _emit(num, title, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    results = []
    for num, title, fn in CRITERIA:
        ok, detail = fn()
        _emit(num, title, ok, detail)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
