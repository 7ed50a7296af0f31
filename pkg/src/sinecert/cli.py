"""sinecert command line: verify reports, replay the pipeline, scan with the
grid oracle and check certificate files.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .certify.dif import CertificateParseError, check_certificate, dumps, loads
from .interval import DEFAULT_PRECISION, MIN_PRECISION, Interval, beta1, beta2
from .lemmas.hcert import PUBLISHED_H1_CHAIN, TARGETS, target_functions
from .lemmas.oracle import DEFAULT_CELLS, MIN_CELLS, scan
from .lemmas.pipeline import pipeline
from .lemmas.report import summary_table
from .lemmas.suite import REPORT_IDS, run_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
PRECISION_ENV = "SINECERT_PRECISION"


@dataclass(frozen=True)
class RunConfig:
    precision: int = DEFAULT_PRECISION
    cells: int = DEFAULT_CELLS
    max_points: int = 64
    out: Path | None = None
    json: bool = False
    verbose: int = 0


class UsageError(ValueError):
    pass


def parse_beta(spec: str, prec: int):
    """'beta1', 'beta2' or an exact decimal (or p/q) -> (label, Interval)."""
    s = spec.strip()
    if s.lower() == "beta1":
        return "beta1", beta1(prec)
    if s.lower() == "beta2":
        return "beta2", beta2(prec)
    try:
        q = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed beta {spec!r}: expected beta1, beta2 or a decimal") from None
    return s, Interval(q, prec=prec)


def parse_range(spec: str):
    """'a..b' (inclusive) or a single integer."""
    try:
        if ".." in spec:
            a, b = spec.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(spec)
    except ValueError:
        raise UsageError(f"malformed range {spec!r}: expected a..b or an integer") from None
    if lo > hi:
        raise UsageError(f"empty range {spec!r}")
    return range(lo, hi + 1)


def _positive_int(name: str, minimum: int = 1):
    def conv(s: str) -> int:
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {s!r}") from None
        if v < minimum:
            raise argparse.ArgumentTypeError(f"{name} must be >= {minimum}, got {v}")
        return v
    return conv


def _default_precision() -> int:
    env = os.environ.get(PRECISION_ENV)
    if env is None:
        return DEFAULT_PRECISION
    try:
        v = int(env)
    except ValueError:
        raise UsageError(f"{PRECISION_ENV}={env!r} is not an integer") from None
    if v < MIN_PRECISION:
        raise UsageError(f"{PRECISION_ENV} must be >= {MIN_PRECISION}")
    return v


def _write(cfg: RunConfig, name: str, text: str) -> None:
    if cfg.out is None:
        return
    cfg.out.mkdir(parents=True, exist_ok=True)
    (cfg.out / name).write_text(text)


# -- commands -------------------------------------------------------------------

def cmd_verify(cfg: RunConfig, target: str) -> int:
    ids = list(REPORT_IDS) if target == "all" else [target]
    reports = [run_report(i, cfg.precision, cfg.max_points) for i in ids]
    ext = "json" if cfg.json else "txt"
    for r in reports:
        _write(cfg, f"{r.lemma}.report.{ext}", r.to_json() + "\n" if cfg.json else r.to_text())
        for c in r.certificates:
            _write(cfg, f"{c.label or r.lemma}.cert", dumps(c))
    if "h-certificates" in ids:
        # the published chain for the h1 target, for use with `check`
        from .certify.dif import certificate_from_chain
        g1, g2 = target_functions(TARGETS[0])
        pub = certificate_from_chain(g1, g2, PUBLISHED_H1_CHAIN, cfg.precision, "h1-published-chain")
        _write(cfg, "h1-published-chain.cert", dumps(pub))

    if cfg.json:
        doc = [r.to_dict() for r in reports]
        print(json.dumps(doc if target == "all" else doc[0], indent=2))
    else:
        if cfg.verbose or len(reports) == 1:
            for r in reports:
                sys.stdout.write(r.to_text())
        sys.stdout.write(summary_table(reports))
        for r in reports:
            for s in r.failures():
                print(f"FAIL {r.lemma}: {s.name} ({s.detail})")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_pipeline(cfg: RunConfig, n: int, beta_spec: str) -> int:
    if n < 7:
        raise UsageError(f"pipeline needs n >= 7, got {n}")
    label, beta = parse_beta(beta_spec, cfg.precision)
    tr = pipeline(n, beta, cfg.precision, label)
    text = tr.to_json() + "\n" if cfg.json else tr.to_text()
    _write(cfg, f"pipeline-n{n}-{label.replace('/', '_')}.{'json' if cfg.json else 'txt'}", text)
    if cfg.json or cfg.verbose:
        sys.stdout.write(text)
    else:
        for r in tr.regions:
            print(f"{r.name:8s} {r.verdict:10s} {r.span}")
        for where, s in tr.failures():
            print(f"FAIL {where}: {s.name} ({s.detail})")
    if not cfg.json:
        print(f"n={n} beta={label} branch={tr.branch} summands={tr.summands} verdict={tr.verdict}")
    return EXIT_OK if tr.proved else EXIT_FAIL


def cmd_scan(cfg: RunConfig, n_spec: str, beta_spec: str) -> int:
    ns = parse_range(n_spec)
    if ns.start < 2:
        raise UsageError(f"scan needs n >= 2, got {ns.start}")
    label, beta = parse_beta(beta_spec, cfg.precision)
    res = scan(ns, beta, cfg.cells, label)
    text = json.dumps(res.to_dict(), indent=2) + "\n" if cfg.json else res.table()
    _write(cfg, f"scan-{ns.start}-{ns.stop - 1}-{label.replace('/', '_')}.{'json' if cfg.json else 'txt'}", text)
    sys.stdout.write(text)
    if not cfg.json:
        neg = [r.n for r in res.rows if r.negative_cells]
        if neg:
            print(f"certified negative cells for n = {', '.join(map(str, neg))}")
        else:
            print("no certified negative cell")
    return EXIT_FAIL if res.any_negative else EXIT_OK


def cmd_check(cfg: RunConfig, path: str) -> int:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        cert = loads(text)
    except CertificateParseError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    res = check_certificate(cert)
    label = cert.label or path
    if cfg.json:
        print(json.dumps({"certificate": label, "points": cert.points, "passed": res.passed,
                          "problems": res.problems}, indent=2))
    else:
        print(f"{'PASS' if res else 'FAIL'} {label}: {cert.points} points")
        for p in res.problems:
            print(f"  {p}")
    return EXIT_OK if res else EXIT_FAIL


# -- entry point ------------------------------------------------------------------

def build_parser(default_prec: int = DEFAULT_PRECISION) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sinecert", description=__doc__.splitlines()[0])
    p.add_argument("--precision", type=_positive_int("precision", MIN_PRECISION), default=default_prec,
                   help=f"working precision in bits (default {default_prec}, env {PRECISION_ENV})")
    p.add_argument("--cells", type=_positive_int("cells", MIN_CELLS), default=DEFAULT_CELLS,
                   help="grid cells for the oracle")
    p.add_argument("--max-points", type=_positive_int("max-points", 2), default=64,
                   help="largest chain length for dif certificates")
    p.add_argument("--out", type=Path, default=None, help="directory for report and certificate files")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a lemma report (or all of them)")
    v.add_argument("target", choices=list(REPORT_IDS) + ["all"], metavar="ID",
                   help=f"one of {', '.join(REPORT_IDS)}, or all")

    pl = sub.add_parser("pipeline", help="replay the positivity argument for one (n, beta)")
    pl.add_argument("--n", type=int, required=True)
    pl.add_argument("--beta", default="beta1", help="beta1, beta2 or a decimal (default beta1)")

    sc = sub.add_parser("scan", help="grid oracle over a range of n")
    sc.add_argument("--n", required=True, help="a..b or a single n")
    sc.add_argument("--beta", default="beta1")
    sc.add_argument("--cells", type=_positive_int("cells", MIN_CELLS), default=None, dest="sub_cells")

    ck = sub.add_parser("check", help="re-validate a dif certificate file")
    ck.add_argument("file")
    return p


def main(argv=None) -> int:
    try:
        default_prec = _default_precision()
    except UsageError as exc:
        print(f"sinecert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    parser = build_parser(default_prec)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cells = getattr(args, "sub_cells", None) or args.cells
    cfg = RunConfig(args.precision, cells, args.max_points, args.out, args.json, args.verbose)
    try:
        if args.command == "verify":
            return cmd_verify(cfg, args.target)
        if args.command == "pipeline":
            return cmd_pipeline(cfg, args.n, args.beta)
        if args.command == "scan":
            return cmd_scan(cfg, args.n, args.beta)
        return cmd_check(cfg, args.file)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"sinecert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
