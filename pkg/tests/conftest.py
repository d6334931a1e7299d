"""Shared test helpers: exact 2-d integration oracle and unimodular maps."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import cmp_to_key

from hamloop import IntMatrix


def ccw_order(points):
    """Vertices of a convex polygon in counterclockwise order (exact)."""
    cx = sum((p[0] for p in points), Fraction(0)) / len(points)
    cy = sum((p[1] for p in points), Fraction(0)) / len(points)
    shifted = [(p[0] - cx, p[1] - cy, p) for p in points]

    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    def compare(a, b):
        ha, hb = half(a), half(b)
        if ha != hb:
            return -1 if ha < hb else 1
        cross = a[0] * b[1] - a[1] * b[0]
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    return [t[2] for t in sorted(shifted, key=cmp_to_key(compare))]


def shoelace_area(points):
    """Convex polygon area by the shoelace formula (independent route)."""
    ordered = ccw_order(points)
    twice = Fraction(0)
    for i, (x1, y1) in enumerate(ordered):
        x2, y2 = ordered[(i + 1) % len(ordered)]
        twice += x1 * y2 - x2 * y1
    return abs(twice) / 2


def polygon_integral(points, form):
    """Integral of an affine form over a convex polygon via the centroid
    rule on a fan decomposition (exact for affine integrands)."""
    ordered = ccw_order(points)
    cx = sum((p[0] for p in ordered), Fraction(0)) / len(ordered)
    cy = sum((p[1] for p in ordered), Fraction(0)) / len(ordered)
    total = Fraction(0)
    for i, (x1, y1) in enumerate(ordered):
        x2, y2 = ordered[(i + 1) % len(ordered)]
        signed = ((x1 - cx) * (y2 - cy) - (x2 - cx) * (y1 - cy)) / 2
        centroid = ((cx + x1 + x2) / 3, (cy + y1 + y2) / 3)
        total += signed * form(centroid)
    return total


def unimodular_with_inverse(rng: random.Random, size: int):
    """Random unimodular U and its exact inverse, as row-lists."""
    U = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    V = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    for _ in range(8 + 2 * size):
        op = rng.randrange(3)
        i, j = rng.randrange(size), rng.randrange(size)
        if op == 0 and i != j:
            k = rng.choice((-2, -1, 1, 2))
            # U <- E U with E adding k*row_j to row_i; V <- V E^{-1}
            U[i] = [a + k * b for a, b in zip(U[i], U[j])]
            for row in V:
                row[j] -= k * row[i]
        elif op == 1 and i != j:
            U[i], U[j] = U[j], U[i]
            for row in V:
                row[i], row[j] = row[j], row[i]
        elif op == 2:
            U[i] = [-a for a in U[i]]
            for row in V:
                row[i] = -row[i]
    return IntMatrix.from_rows(U), IntMatrix.from_rows(V)
