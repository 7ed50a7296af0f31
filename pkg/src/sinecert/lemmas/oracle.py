"""Brute-force oracle: bound S_n over a uniform grid of [0, pi] in double
precision with an explicit rounding budget, independent of the
decomposition argument.

Interior cells use a second order Taylor bound around the midpoint with a
third derivative remainder.  The two end cells use the odd expansion
S(t) = c1 t - c3 t^3/6 + O(t^5) (and its mirror at pi) with c1 and c3
taken from rigorous interval sums.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..interval import Interval, zero
from ..sinepoly import CoefficientSequence, eval_S

U = 2.0 ** -53
MIN_CELLS = 64
DEFAULT_CELLS = 8192


def _table_width(kmax: int) -> int:
    w = 256
    while w < kmax:
        w *= 2
    return w


@lru_cache(maxsize=4)
def _tables(cells: int, kmax: int):
    """Midpoints, cell width and sin/cos of k*mid, one row per k = 1..kmax."""
    h = np.pi / cells
    j = np.arange(cells, dtype=np.float64)
    mids = (j + 0.5) * h
    k = np.arange(1, kmax + 1, dtype=np.float64)
    km = np.outer(k, mids)
    # argument error |k m| u plus one ulp for sin/cos, doubled for slack
    err = (np.abs(km) + 2.0) * 2 * U
    return mids, h, np.sin(km), np.cos(km), err, k


def _float_coeffs(seq: CoefficientSequence):
    lo = np.array([seq[k].lo_float() for k in range(1, seq.n)], dtype=np.float64)
    hi = np.array([seq[k].hi_float() for k in range(1, seq.n)], dtype=np.float64)
    return lo, hi


def _sum_lower(alo, ahi, vals, errs):
    """Lower bound of sum_k a_k t_k per cell, a_k in [alo, ahi] >= 0, |t_k - vals| <= errs."""
    v = vals - errs
    terms = np.where(v >= 0, alo[:, None] * v, ahi[:, None] * v)
    s = terms.sum(axis=0)
    budget = (terms.shape[0] + 3) * 2 * U * np.abs(terms).sum(axis=0)
    return s - budget


def _sum_upper(alo, ahi, vals, errs):
    v = vals + errs
    terms = np.where(v >= 0, ahi[:, None] * v, alo[:, None] * v)
    s = terms.sum(axis=0)
    budget = (terms.shape[0] + 3) * 2 * U * np.abs(terms).sum(axis=0)
    return s + budget


@dataclass
class GridBounds:
    n: int
    beta: Interval
    cells: int
    lower: np.ndarray          # per cell lower bound of min S
    upper: np.ndarray          # per cell upper bound of min S (value at a point of the cell)
    cell_upper: np.ndarray     # per cell upper bound of max S (for negativity certificates)
    h: float

    def cell(self, j: int):
        return (j * self.h, (j + 1) * self.h)

    @property
    def argmin(self) -> int:
        return int(np.argmin(self.lower))

    def negative_cells(self) -> list:
        return [int(j) for j in np.nonzero(self.cell_upper < 0)[0]]


def grid_bounds(n: int, beta: Interval, cells: int = DEFAULT_CELLS) -> GridBounds:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if cells < MIN_CELLS:
        raise ValueError(f"need at least {MIN_CELLS} cells, got {cells}")
    seq = CoefficientSequence.build(n, beta)
    alo, ahi = _float_coeffs(seq)
    kmax = n - 1
    mids, h, sin_t, cos_t, err, k = _tables(cells, _table_width(kmax))
    sin_t, cos_t, err, k = sin_t[:kmax], cos_t[:kmax], err[:kmax], k[:kmax]
    # radius covers the float midpoint and the rounded cell width
    r = 0.5 * h * (1 + 2.0 ** -40) + 8 * U * np.pi

    s_lo = _sum_lower(alo, ahi, sin_t, err)
    s_hi = _sum_upper(alo, ahi, sin_t, err)
    d1_lo = _sum_lower(alo * k, ahi * k * (1 + 4 * U), cos_t, err)
    d1_hi = _sum_upper(alo * k, ahi * k * (1 + 4 * U), cos_t, err)
    d1_abs = np.maximum(np.abs(d1_lo), np.abs(d1_hi))
    k2 = k * k
    # S'' = -sum k^2 a_k sin(k x)
    d2_lo = -_sum_upper(alo * k2, ahi * k2 * (1 + 4 * U), sin_t, err)
    d2_hi = -_sum_lower(alo * k2, ahi * k2 * (1 + 4 * U), sin_t, err)
    m3 = float((k ** 3 * ahi).sum()) * (1 + (kmax + 8) * 4 * U)

    lower = s_lo - d1_abs * r + np.minimum(0.0, d2_lo) * r * r / 2 - m3 * r ** 3 / 6
    cell_upper = s_hi + d1_abs * r + np.maximum(0.0, d2_hi) * r * r / 2 + m3 * r ** 3 / 6
    upper = s_hi.copy()

    # end cells: S(t) = c1 t - c3 t^3/6 + R with |R| <= M5 t^5/120, c1 = sum k a_k,
    # c3 = sum k^3 a_k; at pi the same with signs (-1)^(k+1)
    w = h * (1 + 2.0 ** -40)
    w2 = w * w
    m5 = float((k ** 5 * ahi).sum()) * (1 + (kmax + 8) * 4 * U)
    for j, alt in ((0, False), (cells - 1, True)):
        c1, c3 = _end_sums(seq, alt)
        # on [0, w] each correction is largest in size at t = w
        drop = (max(0.0, c3.hi_float()) * w2 / 6 + m5 * w2 * w2 / 120) * (1 + 8 * U)
        rise = (max(0.0, -c3.lo_float()) * w2 / 6 + m5 * w2 * w2 / 120) * (1 + 8 * U)
        lower[j] = min(0.0, w * (c1.lo_float() - drop))
        upper[j] = 0.0
        cell_upper[j] = max(0.0, w * (c1.hi_float() + rise))
    return GridBounds(n, beta, cells, lower, upper, cell_upper, h)


def _end_sums(seq: CoefficientSequence, alternating: bool):
    """(sum k a_k, sum k^3 a_k), with signs (-1)^(k+1) for the end at pi."""
    c1 = zero(seq.prec)
    c3 = zero(seq.prec)
    for k in range(1, seq.n):
        t = seq[k] * k
        if alternating and k % 2 == 0:
            c1, c3 = c1 - t, c3 - t * (k * k)
        else:
            c1, c3 = c1 + t, c3 + t * (k * k)
    return c1, c3


def brute_min(n: int, beta: Interval, cells: int = DEFAULT_CELLS):
    """(cell, enclosure of min_{[0, pi]} S) with the cell of smallest lower bound."""
    g = grid_bounds(n, beta, cells)
    j = g.argmin
    lo = float(g.lower[j])
    hi = float(np.min(g.upper))
    enc = Interval(Fraction(min(lo, hi)), Fraction(hi), prec=beta.prec)
    return g.cell(j), enc


@dataclass
class Witness:
    x: Fraction
    value: Interval          # rigorous enclosure of S(x)
    cell: tuple


def sharpness(n: int, beta: Interval, cells: int = DEFAULT_CELLS, grid: GridBounds | None = None):
    """A point where S < 0, confirmed by interval evaluation, or None.

    Cells whose whole enclosure is negative are candidates; the one with the
    most negative upper bound is re-evaluated at its midpoint.
    """
    g = grid or grid_bounds(n, beta, cells)
    neg = g.negative_cells()
    if not neg:
        return None
    j = min(neg, key=lambda i: g.cell_upper[i])
    lo, hi = g.cell(j)
    x = Fraction((lo + hi) / 2)
    v = eval_S(n, beta, Interval(x, prec=beta.prec)).value
    if not v.is_negative():
        return None
    return Witness(x, v, (lo, hi))


@dataclass
class ScanRow:
    n: int
    lower: float
    upper: float
    argmin: tuple
    negative_cells: int
    witness: Witness | None = None

    @property
    def certified_nonnegative(self) -> bool:
        return self.lower >= 0


@dataclass
class ScanResult:
    beta: Interval
    beta_label: str
    cells: int
    rows: list = field(default_factory=list)

    @property
    def any_negative(self) -> bool:
        return any(r.negative_cells for r in self.rows)

    def table(self) -> str:
        head = ("n", "min lower", "min upper", "argmin cell", "neg cells", "witness")
        out = [head]
        for r in self.rows:
            wit = "-" if r.witness is None else f"x={float(r.witness.x):.6f} S<={r.witness.value.hi_float():.3e}"
            out.append((str(r.n), f"{r.lower:.3e}", f"{r.upper:.3e}",
                        f"[{r.argmin[0]:.6f}, {r.argmin[1]:.6f}]", str(r.negative_cells), wit))
        widths = [max(len(row[i]) for row in out) for i in range(len(head))]
        lines = [f"# scan beta={self.beta_label} cells={self.cells}"]
        for i, row in enumerate(out):
            lines.append("  ".join(c.ljust(wd) for c, wd in zip(row, widths)).rstrip())
            if i == 0:
                lines.append("  ".join("-" * wd for wd in widths))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "beta": self.beta_label,
            "cells": self.cells,
            "any_negative": self.any_negative,
            "rows": [{"n": r.n, "lower": r.lower, "upper": r.upper, "argmin": list(r.argmin),
                      "negative_cells": r.negative_cells,
                      "witness": None if r.witness is None else
                      {"x": float(r.witness.x), "value_hi": r.witness.value.hi_float()}}
                     for r in self.rows],
        }


def scan(ns, beta: Interval, cells: int = DEFAULT_CELLS, beta_label: str = "") -> ScanResult:
    res = ScanResult(beta, beta_label or beta.fmt(12), cells)
    for n in ns:
        g = grid_bounds(n, beta, cells)
        j = g.argmin
        wit = sharpness(n, beta, cells, g)
        res.rows.append(ScanRow(n, float(g.lower[j]), float(np.min(g.upper)), g.cell(j),
                                len(g.negative_cells()), wit))
    return res
