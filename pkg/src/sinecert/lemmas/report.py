"""Lemma reports: a list of checked steps plus the enclosures and
certificates they produced, with text and JSON serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..interval import Interval, exact_decimal

FORMAT_TAG = "sinecert-lemma-report"
FORMAT_VERSION = 1

KINDS = ("interval", "sturm", "dif", "exact", "analytic", "grid")

CERTIFIED = "certified"
NUMERIC_PASS = "numeric-pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass
class Step:
    """One checked claim.  ``passed`` is None when the check was undecided."""

    name: str
    kind: str
    passed: bool | None
    detail: str = ""
    value: Interval | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown step kind {self.kind!r}")

    @property
    def verdict(self) -> str:
        if self.passed is None:
            return "inconclusive"
        return "pass" if self.passed else "fail"


@dataclass
class LemmaReport:
    lemma: str
    title: str
    steps: list = field(default_factory=list)
    constants: dict = field(default_factory=dict)
    certificates: list = field(default_factory=list)
    sturm: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, name: str, kind: str, passed, detail: str = "", value=None) -> Step:
        st = Step(name, kind, None if passed is None else bool(passed), detail, value)
        self.steps.append(st)
        return st

    def const(self, name: str, value: Interval) -> Interval:
        self.constants[name] = value
        return value

    def add_sturm(self, name: str, result) -> Step:
        self.sturm.append(result)
        return self.add(name, "sturm", result.passed, result.describe())

    def note(self, text: str) -> None:
        self.notes.append(text)

    @property
    def status(self) -> str:
        if not self.steps:
            return INCONCLUSIVE
        if any(s.passed is False for s in self.steps):
            return FAIL
        if any(s.passed is None for s in self.steps):
            return INCONCLUSIVE
        if any(s.kind == "grid" for s in self.steps):
            return NUMERIC_PASS
        return CERTIFIED

    @property
    def ok(self) -> bool:
        return self.status in (CERTIFIED, NUMERIC_PASS)

    def failures(self) -> list:
        return [s for s in self.steps if s.passed is not True]

    # -- output ---------------------------------------------------------------

    def to_text(self) -> str:
        out = [f"# {FORMAT_TAG} v{FORMAT_VERSION}",
               f"lemma {self.lemma}",
               f"title {self.title}",
               f"status {self.status}"]
        for s in self.steps:
            line = f"step {s.verdict} {s.kind} {s.name}"
            if s.value is not None:
                line += f" value={_enc(s.value)}"
            if s.detail:
                line += f" :: {s.detail}"
            out.append(line)
        for name in sorted(self.constants):
            out.append(f"constant {name} {_enc(self.constants[name])} ~ {self.constants[name].fmt(16)}")
        for c in self.certificates:
            out.append(f"certificate {c.label or '-'} points={c.points} direction={c.direction} "
                       f"monotonicity={c.monotonicity}")
        for n in self.notes:
            out.append(f"note {n}")
        out.append("end")
        return "\n".join(out) + "\n"

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "title": self.title,
            "status": self.status,
            "steps": [{"name": s.name, "kind": s.kind, "verdict": s.verdict, "detail": s.detail,
                       "value": None if s.value is None else _pair(s.value)} for s in self.steps],
            "constants": {k: _pair(v) for k, v in sorted(self.constants.items())},
            "certificates": [{"label": c.label, "points": c.points,
                              "chain": [str(t) for t in c.chain],
                              "monotonicity": c.monotonicity} for c in self.certificates],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _enc(v: Interval) -> str:
    return f"[{exact_decimal(v.raw[0])}, {exact_decimal(v.raw[1])}]"


def _pair(v: Interval) -> list:
    return [exact_decimal(v.raw[0]), exact_decimal(v.raw[1])]


def summary_table(reports) -> str:
    """Fixed-width overview, one row per report."""
    rows = [("lemma", "status", "steps", "failed", "certs")]
    for r in reports:
        rows.append((r.lemma, r.status, str(len(r.steps)), str(len(r.failures())),
                     str(len(r.certificates))))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for i, row in enumerate(rows):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
