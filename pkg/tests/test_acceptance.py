"""Acceptance criteria, one test per criterion.

Every comparison is exact rational equality; the only tolerances are the
stated wall-clock budgets. Each test prints one pass/fail line.
"""

import random
import time
from fractions import Fraction

from hamloop import (
    BlowupParams,
    Verdict,
    blowup_model,
    build_model,
    cpn_model,
    facet_values_closed_form,
    invariant_closed_form,
    invariant_coordinate,
    invariant_loop,
    kappa_closed_form,
    lasserre_volume,
    volume,
)
from hamloop.selftest import (
    random_bounded_polytope,
    random_unimodular,
    random_weight_data,
    run_all,
    standard_grid,
)


def _criterion(number, name):
    def decorator(fn):
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"criterion {number:2d} {name}: FAIL")
                raise
            print(f"criterion {number:2d} {name}: PASS")
        wrapper.__name__ = fn.__name__
        return wrapper
    return decorator


def _blowup(p):
    W, level = blowup_model(p)
    return build_model(W, level)


@_criterion(1, "cp1-vanishing")
def test_criterion_1_cp1_vanishing():
    start = time.monotonic()
    for tau in (Fraction(1), Fraction(2), Fraction(7, 3)):
        W, level = cpn_model(1, tau)
        rep = invariant_coordinate(build_model(W, level), 0)
        assert rep.invariant == 0
        assert rep.kappa == tau / 2
    assert time.monotonic() - start < 1.0


@_criterion(2, "cp2-vanishing")
def test_criterion_2_cp2_vanishing():
    start = time.monotonic()
    for tau in (Fraction(1), Fraction(3), Fraction(5, 2)):
        W, level = cpn_model(2, tau)
        rep = invariant_coordinate(build_model(W, level), 0)
        assert rep.invariant == 0
        assert rep.kappa == tau / 3
    assert time.monotonic() - start < 1.0


@_criterion(3, "blowup-grid")
def test_criterion_3_blowup_full_formula():
    start = time.monotonic()
    grid = standard_grid()
    assert len(grid) >= 20
    for p in grid:
        rep = invariant_coordinate(_blowup(p), 0)
        assert rep.invariant == invariant_closed_form(p, 0)
        assert rep.kappa == kappa_closed_form(p, 0)
        assert rep.facet_contributions == facet_values_closed_form(p, 0)
    spot = invariant_coordinate(_blowup(BlowupParams(Fraction(2), Fraction(1))), 0)
    assert spot.invariant == Fraction(-1, 2)
    assert spot.kappa == Fraction(15, 28)
    assert spot.facet_contributions == (
        Fraction(135, 28), Fraction(-61, 28), Fraction(-44, 28),
        Fraction(17, 28), Fraction(-61, 28))
    assert time.monotonic() - start < 10.0


@_criterion(4, "loop-relations")
def test_criterion_4_loop_relations():
    for p in standard_grid():
        model = _blowup(p)
        rep3 = invariant_coordinate(model, 2)
        rep4 = invariant_coordinate(model, 3)
        base = invariant_coordinate(model, 0).invariant
        assert rep4.invariant == -rep3.invariant == 3 * base
        assert rep3.invariant == invariant_closed_form(p, 2)
        assert rep4.kappa == kappa_closed_form(p, 3)


@_criterion(5, "nonvanishing-verdict")
def test_criterion_5_nonvanishing_verdict():
    for p in standard_grid():
        rep = invariant_coordinate(_blowup(p), 0)
        assert rep.invariant != 0
        assert rep.verdict is Verdict.INFINITE_CYCLIC


@_criterion(6, "torus-relation-nullity")
def test_criterion_6_torus_relation_nullity():
    rng = random.Random(52100)
    cases = [cpn_model(2, Fraction(1)),
             blowup_model(BlowupParams(Fraction(2), Fraction(1)))]
    cases += [random_weight_data(rng) for _ in range(3)]
    for W, level in cases:
        model = build_model(W, level)
        for i in range(W.rows):
            assert invariant_loop(model, W.row(i)).invariant == 0


@_criterion(7, "volume-oracle-equivalence")
def test_criterion_7_volume_oracle_equivalence():
    rng = random.Random(90125)
    for _ in range(10):
        poly = random_bounded_polytope(rng)
        assert poly.dim <= 4 and len(poly.inequalities) <= 10
        assert volume(poly) == lasserre_volume(poly)


@_criterion(8, "choice-independence")
def test_criterion_8_choice_independence():
    rng = random.Random(112358)
    manifolds = [cpn_model(2, Fraction(3, 2)),
                 blowup_model(BlowupParams(Fraction(2), Fraction(1)))]
    for W, level in manifolds:
        base = build_model(W, level)
        base_reports = [invariant_coordinate(base, a) for a in range(base.m)]
        for _ in range(5):
            U = random_unimodular(rng, base.dim)
            t = [Fraction(rng.randint(-3, 3), rng.randint(1, 4))
                 for _ in range(base.dim)]
            moved = tuple(s + d for s, d in
                          zip(base.base_solution, base.kernel_basis.mul_vector(t)))
            other = build_model(W, level, kernel_basis=base.kernel_basis @ U,
                                base_solution=moved)
            for a in range(base.m):
                assert invariant_coordinate(other, a) == base_reports[a]


@_criterion(9, "scaling-degree")
def test_criterion_9_scaling_degree():
    base = invariant_coordinate(
        _blowup(BlowupParams(Fraction(2), Fraction(1))), 0).invariant
    for gamma in (Fraction(2), Fraction(1, 3)):
        scaled = invariant_coordinate(
            _blowup(BlowupParams(2 * gamma, gamma)), 0).invariant
        assert scaled == gamma**3 * base


@_criterion(10, "selftest-runtime")
def test_criterion_10_selftest_runtime():
    start = time.monotonic()
    assert run_all()
    assert time.monotonic() - start < 60.0
