"""Property checks shared by the unit tests and the acceptance run.

Each check returns a list of violation strings; an empty list is a pass.
Randomness is seeded so that every run sees the same cases.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import mpmath

from sinecert import interval as I
from sinecert.decompose import FULLY_CONVEX, build, count_T_summands, split_point
from sinecert.interval import DomainError, Interval
from sinecert.sinepoly import CoefficientSequence, eval_S, tau

ORACLE_BITS = 320
# relative slack for the mpmath oracle; far below any interval width at <= 128 bits
ORACLE_TOL = Fraction(1, 2**300)

PRECS = (53, 64, 96, 128)


def _rand_fraction(rng: random.Random, scale: float) -> Fraction:
    return Fraction(rng.uniform(-scale, scale))


def _rand_interval(rng: random.Random, prec: int, lo_min=None, scale: float = 8.0) -> Interval:
    a = _rand_fraction(rng, scale)
    if lo_min is not None:
        a = lo_min + abs(a)
    r = rng.random()
    if r < 0.2:
        w = Fraction(0)
    elif r < 0.6:
        w = Fraction(rng.random()) * Fraction(1, 10 ** rng.randint(0, 12))
    else:
        w = Fraction(rng.random()) * scale
    return Interval(a, a + w, prec=prec)


def _pick(rng: random.Random, iv: Interval) -> Fraction:
    lo, hi = iv.lo_fraction, iv.hi_fraction
    r = rng.random()
    if r < 0.15:
        return lo
    if r < 0.3:
        return hi
    return lo + (hi - lo) * Fraction(rng.random())


def _sub(rng: random.Random, iv: Interval) -> Interval:
    p, q = sorted((_pick(rng, iv), _pick(rng, iv)))
    return Interval(p, q, prec=iv.prec)


def _mpf(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


# name, arity, domain kind, interval function, exact rational function or mpmath function
_UNARY = {
    "exp": (I.exp, mpmath.exp, "small"),
    "ln": (I.ln, mpmath.log, "positive"),
    "sqrt": (I.sqrt, mpmath.sqrt, "nonnegative"),
    "sin": (I.sin, mpmath.sin, "any"),
    "cos": (I.cos, mpmath.cos, "any"),
    "sqr": (lambda a: a ** 2, None, "any"),
    "cube": (lambda a: a ** 3, None, "any"),
    "neg": (lambda a: -a, None, "any"),
    "abs": (abs, None, "any"),
}
_BINARY = {
    "add": (lambda a, b: a + b, lambda p, q: p + q),
    "sub": (lambda a, b: a - b, lambda p, q: p - q),
    "mul": (lambda a, b: a * b, lambda p, q: p * q),
    "div": (lambda a, b: a / b, lambda p, q: p / q),
}
_RATIONAL_UNARY = {
    "sqr": lambda p: p * p,
    "cube": lambda p: p ** 3,
    "neg": lambda p: -p,
    "abs": abs,
}


def _contains_exact(iv: Interval, v: Fraction) -> bool:
    return iv.lo_fraction <= v <= iv.hi_fraction


def _contains_approx(iv: Interval, v) -> bool:
    tol = abs(v) * _mpf(ORACLE_TOL) + mpmath.mpf(2) ** -600
    return iv.lo <= v + tol and v - tol <= iv.hi


def _subset(inner: Interval, outer: Interval) -> bool:
    return outer.lo <= inner.lo and inner.hi <= outer.hi


def _operand(rng, prec, kind):
    if kind == "small":
        return _rand_interval(rng, prec, scale=20.0)
    if kind == "positive":
        return _rand_interval(rng, prec, lo_min=Fraction(1, 2**40) * rng.randint(1, 2**20))
    if kind == "nonnegative":
        return _rand_interval(rng, prec, lo_min=Fraction(0))
    return _rand_interval(rng, prec)


def interval_fuzz(cases: int = 100_000, seed: int = 20240601) -> list:
    """Containment against exact or high-precision oracles, and inclusion
    monotonicity f(A') within f(A) for A' inside A."""
    rng = random.Random(seed)
    bad = []
    names = list(_UNARY) + list(_BINARY) + ["pow"]
    with mpmath.workprec(ORACLE_BITS):
        for i in range(cases):
            prec = rng.choice(PRECS)
            name = names[i % len(names)]
            if name in _BINARY:
                f, exact = _BINARY[name]
                a, b = _rand_interval(rng, prec), _rand_interval(rng, prec)
                if name == "div" and b.contains(0):
                    try:
                        f(a, b)
                        bad.append(f"{name}: no DomainError for {b!r}")
                    except DomainError:
                        pass
                    continue
                r = f(a, b)
                p, q = _pick(rng, a), _pick(rng, b)
                if not _contains_exact(r, exact(p, q)):
                    bad.append(f"{name}({a!r}, {b!r}) = {r!r} misses the value at {p}, {q}")
                if not _subset(f(_sub(rng, a), _sub(rng, b)), r):
                    bad.append(f"{name}: inclusion monotonicity fails at case {i}")
                continue
            if name == "pow":
                a = _operand(rng, prec, "positive")
                e = Interval(_rand_fraction(rng, 3.0), prec=prec)
                r = I.pow_(a, e)
                p = _pick(rng, a)
                if not _contains_approx(r, mpmath.power(_mpf(p), _mpf(e.lo_fraction))):
                    bad.append(f"pow({a!r}, {e!r}) = {r!r} misses the value at {p}")
                if not _subset(I.pow_(_sub(rng, a), e), r):
                    bad.append(f"pow: inclusion monotonicity fails at case {i}")
                continue
            f, ref, kind = _UNARY[name]
            a = _operand(rng, prec, kind)
            r = f(a)
            p = _pick(rng, a)
            ok = _contains_exact(r, _RATIONAL_UNARY[name](p)) if ref is None else _contains_approx(r, ref(_mpf(p)))
            if not ok:
                bad.append(f"{name}({a!r}) = {r!r} misses the value at {p}")
            if not _subset(f(_sub(rng, a)), r):
                bad.append(f"{name}: inclusion monotonicity fails at case {i}")
    return bad


def tau_agreement(kmax: int = 64, points: int = 8, seed: int = 7, prec: int = 128) -> list:
    """Closed forms of tau_k and tau^-_k overlap the direct sums."""
    rng = random.Random(seed)
    bad = []
    xs = [Fraction(rng.uniform(0.1, math.pi)) for _ in range(points)] + [Fraction(1, 10), Fraction(3)]
    for x in xs:
        xi = Interval(x, prec=prec)
        for k in range(1, kmax + 1):
            for alt in (False, True):
                c = tau(k, xi, alt, "closed", prec).value
                d = tau(k, xi, alt, "direct", prec).value
                if not c.overlaps(d):
                    bad.append(f"tau{'-' if alt else ''}_{k}({float(x):.6f}): closed {c} vs direct {d}")
    return bad


def decomposition_identity(ns=range(7, 201), points: int = 32, seed: int = 11,
                           beta=None, prec: int = 128) -> list:
    """H + K + T overlaps S at random points, for S and for S^-."""
    rng = random.Random(seed)
    b = beta or I.beta1(prec)
    bad = []
    for n in ns:
        dec = build(CoefficientSequence.build(n, b, None if beta else I.beta1))
        for j in range(points):
            x = Interval(Fraction(rng.uniform(0.0, math.pi)), prec=prec)
            alt = j % 2 == 1
            parts = dec.eval_parts(x, alt)
            direct = eval_S(dec.seq, x=x, alternating=alt).value
            if not parts.overlaps(direct):
                bad.append(f"n={n} x={x} alt={alt}: H+K+T {parts} vs S {direct}")
    return bad


def split_invariants(ns=range(7, 201), betas=None, prec: int = 128) -> list:
    """Every split has an even number of nondecreasing d-weights."""
    if betas is None:
        betas = [I.beta1(prec)] + [Interval(Fraction(s), prec=prec) for s in ("0.7", "0.8", "0.9", "1")]
    bad = []
    for b in betas:
        for n in ns:
            seq = CoefficientSequence.build(n, b)
            dec = build(seq)
            if dec.t_summands % 2:
                bad.append(f"n={n} beta={b}: {dec.t_summands} summands")
            if dec.t_summands != len(dec.d_weights):
                bad.append(f"n={n} beta={b}: summand count mismatch")
            if not dec.d_nondecreasing():
                bad.append(f"n={n} beta={b}: d not nondecreasing")
            if not all(d.is_positive() for d in dec.d_weights):
                bad.append(f"n={n} beta={b}: nonpositive d")
            m = split_point(seq)
            if (m == FULLY_CONVEX) != dec.fully_convex:
                bad.append(f"n={n} beta={b}: split_point disagrees with build")
    return bad


def count_monotone_in_beta(n_max: int = 60, betas=("0.65", "0.7", "0.8", "0.9", "1"),
                           prec: int = 128) -> list:
    """A larger exponent never gives more T summands."""
    bad = []
    for n in range(7, n_max + 1):
        counts = [count_T_summands(n, prec=prec)]
        counts += [count_T_summands(n, Interval(Fraction(s), prec=prec)) for s in betas]
        if any(x < y for x, y in zip(counts, counts[1:])):
            bad.append(f"n={n}: counts {counts} for beta1, {', '.join(betas)}")
    return bad
