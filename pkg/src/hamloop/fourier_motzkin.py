"""Fourier-Motzkin elimination over the rationals, with strict inequalities.

A constraint is (coeffs, bound, strict) encoding <coeffs, x> >= bound,
or > bound when strict. Elimination projects the solution set exactly over
an ordered field, so feasibility answers and witnesses are exact.

Internally constraints are canonicalized to integer coefficients with
overall gcd 1, which keeps duplicates deduplicated between rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

Constraint = tuple[tuple[int, ...], Fraction, bool]


def make(coeffs: Sequence, bound=0, strict: bool = False) -> Constraint:
    """Canonical constraint <coeffs, x> >= bound (> if strict)."""
    cs = [Fraction(c) for c in coeffs]
    b = Fraction(bound)
    mult = lcm(b.denominator, *(c.denominator for c in cs)) if cs else b.denominator
    ints = [int(c * mult) for c in cs]
    bi = int(b * mult)
    g = 0
    for v in ints:
        g = gcd(g, v)
    g = gcd(g, bi)
    if g == 0:
        g = 1
    return tuple(v // g for v in ints), Fraction(bi, g), bool(strict)


def _violated_constant(con: Constraint) -> bool:
    coeffs, bound, strict = con
    if any(c != 0 for c in coeffs):
        return False
    # 0 >= bound fails when bound > 0; 0 > bound also fails at bound == 0
    return bound > 0 or (strict and bound == 0)


def _eliminate_last(constraints: list[Constraint]) -> list[Constraint]:
    pos: list[Constraint] = []
    neg: list[Constraint] = []
    kept: set[Constraint] = set()
    for coeffs, bound, strict in constraints:
        c = coeffs[-1]
        if c > 0:
            pos.append((coeffs, bound, strict))
        elif c < 0:
            neg.append((coeffs, bound, strict))
        else:
            kept.add(make(coeffs[:-1], bound, strict))
    for cp, bp, sp in pos:
        a = cp[-1]
        for cn, bn, sn in neg:
            b = cn[-1]
            # a * (neg constraint) - b * (pos constraint): last coord cancels
            coeffs = [a * cn[k] - b * cp[k] for k in range(len(cp) - 1)]
            bound = a * bn - b * bp
            kept.add(make(coeffs, bound, sp or sn))
    return sorted(kept)


def feasible(constraints: Sequence, nvars: int) -> bool:
    cur = sorted({make(c, b, s) for c, b, s in constraints})
    for _ in range(nvars):
        if any(_violated_constant(con) for con in cur):
            return False
        cur = _eliminate_last(cur)
    return not any(_violated_constant(con) for con in cur)


def find_point(constraints: Sequence, nvars: int) -> Optional[tuple[Fraction, ...]]:
    """A rational point satisfying all constraints, or None if infeasible."""
    systems = [sorted({make(c, b, s) for c, b, s in constraints})]
    for _ in range(nvars):
        systems.append(_eliminate_last(systems[-1]))
    if any(_violated_constant(con) for con in systems[-1]):
        return None
    # systems[nvars - k] constrains variables 0..k-1
    point: list[Fraction] = []
    for k in range(1, nvars + 1):
        lo = hi = None
        lo_strict = hi_strict = False
        for coeffs, bound, strict in systems[nvars - k]:
            c = coeffs[k - 1]
            if c == 0:
                continue
            rest = bound - sum(Fraction(coeffs[j]) * point[j] for j in range(k - 1))
            cand = rest / c
            if c > 0:
                if lo is None or cand > lo or (cand == lo and strict):
                    lo, lo_strict = cand, strict
            else:
                if hi is None or cand < hi or (cand == hi and strict):
                    hi, hi_strict = cand, strict
        point.append(_pick(lo, lo_strict, hi, hi_strict))
    return tuple(point)


def _pick(lo, lo_strict, hi, hi_strict) -> Fraction:
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return hi - 1 if hi_strict else hi
    if hi is None:
        return lo + 1 if lo_strict else lo
    if lo < hi:
        return (lo + hi) / 2
    if lo == hi and not lo_strict and not hi_strict:
        return lo
    raise AssertionError("elimination promised a feasible interval")
