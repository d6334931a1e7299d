"""Moment polytopes of symplectic quotients from integer weight data.

A model is built from an r x m integer matrix W (columns are the weight
vectors) and a rational level vector. The quotient's moment polytope is
realized in kernel-slice coordinates: with Q a saturated basis of
ker(W) ∩ Z^m and s0 a particular solution of W s = level, the k-th moment
coordinate becomes the affine slice function s_k(x) = s0[k] + <row_k(Q), x>
and the polytope is {x : s_k(x) >= 0 for all k}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import fourier_motzkin as fm
from .exact_linalg import (
    IntMatrix,
    determinant,
    integer_kernel,
    primitive,
    rational_rank,
    solve_rational,
)
from .polytope import (
    AffineForm,
    EmptyPolytope,
    Polytope,
    interior_point,
)


class NotFullDimensional(Exception):
    """The level vector fails the regular-value requirement."""


class AssumptionsViolated(Exception):
    """The weight matrix fails a standing assumption; report attached."""

    def __init__(self, report: "AssumptionReport"):
        self.report = report
        problems = []
        if not report.rank_ok:
            problems.append(f"weights span rank {report.rank} < {report.required_rank}")
        if not report.halfspace_ok:
            problems.append("no open half space contains every weight vector")
        super().__init__("; ".join(problems) or "assumptions violated")


@dataclass(frozen=True)
class AssumptionReport:
    rank: int
    required_rank: int
    halfspace_ok: bool
    halfspace_witness: Optional[tuple[Fraction, ...]]

    @property
    def rank_ok(self) -> bool:
        return self.rank == self.required_rank

    @property
    def ok(self) -> bool:
        return self.rank_ok and self.halfspace_ok


class SmoothnessClass(enum.Enum):
    DELZANT = "Delzant"
    SIMPLE_ONLY = "SimpleOnly"
    NON_SIMPLE = "NonSimple"


@dataclass(frozen=True)
class DelzantModel:
    """Weight data plus its polytope in kernel-slice coordinates.

    scales[k] is the gcd factor relating slice k's gradient to the stored
    primitive facet normal (row_k(Q) = scales[k] * normal); it is None for
    slices whose gradient vanishes (constant slices, which never cut the
    polytope). ineq_index maps each coordinate to its inequality index in
    the polytope, or None for constant slices.
    """

    weights: IntMatrix
    level: tuple[Fraction, ...]
    kernel_basis: IntMatrix
    base_solution: tuple[Fraction, ...]
    slices: tuple[AffineForm, ...]
    scales: tuple[Optional[int], ...]
    ineq_index: tuple[Optional[int], ...]
    polytope: Polytope

    @property
    def m(self) -> int:
        return self.weights.cols

    @property
    def r(self) -> int:
        return self.weights.rows

    @property
    def dim(self) -> int:
        return self.polytope.dim

    def facet_of_coord(self, k: int):
        idx = self.ineq_index[k]
        return None if idx is None else self.polytope.facet(idx)


def check_assumptions(W: IntMatrix) -> AssumptionReport:
    """Rank and open-half-space checks on the weight columns.

    The half-space test decides, exactly, whether some rational xi has
    <w_j, xi> > 0 for every column w_j (strict feasibility via
    Fourier-Motzkin); a witness is reported when one exists.
    """
    columns = [W.column(j) for j in range(W.cols)]
    rank = rational_rank(columns)
    witness = fm.find_point([fm.make(w, 0, strict=True) for w in columns], W.rows)
    return AssumptionReport(rank, W.rows, witness is not None, witness)


def build_model(W: IntMatrix, level: Sequence,
                kernel_basis: Optional[IntMatrix] = None,
                base_solution: Optional[Sequence] = None) -> DelzantModel:
    """Construct the moment-polytope model for (W, level).

    kernel_basis and base_solution may be injected (any valid choices); the
    resulting polytope then differs by an affine-unimodular change of
    coordinates, and every reported quantity is unchanged.
    """
    report = check_assumptions(W)
    if not report.ok:
        raise AssumptionsViolated(report)
    m, r = W.cols, W.rows
    level_vec = tuple(Fraction(t) for t in level)

    Q = kernel_basis if kernel_basis is not None else integer_kernel(W)
    if Q.rows != m or Q.cols != m - r:
        raise ValueError("kernel basis has the wrong shape")
    if not (W @ Q).is_zero():
        raise ValueError("kernel basis does not annihilate the weight matrix")

    if base_solution is not None:
        s0 = tuple(Fraction(t) for t in base_solution)
        if W.mul_vector(s0) != level_vec:
            raise ValueError("base solution does not solve the level equations")
    else:
        s0 = solve_rational(W, level_vec)

    n = m - r
    slices = tuple(AffineForm(s0[k], tuple(Fraction(e) for e in Q.row(k)))
                   for k in range(m))

    scales: list[Optional[int]] = []
    ineq_index: list[Optional[int]] = []
    inequalities = []
    for k in range(m):
        row = Q.row(k)
        if all(e == 0 for e in row):
            if s0[k] < 0:
                raise EmptyPolytope(f"slice {k} is the negative constant {s0[k]}")
            if s0[k] == 0:
                raise NotFullDimensional(f"slice {k} vanishes identically")
            scales.append(None)
            ineq_index.append(None)
            continue
        u, g = primitive(row)
        scales.append(g)
        ineq_index.append(len(inequalities))
        inequalities.append((u, s0[k] / g))

    poly = Polytope.from_inequalities(n, inequalities)
    if n > 0 and interior_point(n, poly.inequalities) is None:
        raise NotFullDimensional("the polytope has empty interior")
    return DelzantModel(W, level_vec, Q, s0, slices,
                        tuple(scales), tuple(ineq_index), poly)


def smoothness_class(model: DelzantModel) -> SmoothnessClass:
    """Vertex-by-vertex facet-normal test.

    Delzant: every vertex lies on exactly n facets whose primitive normals
    have determinant +-1. SimpleOnly: exactly n facets everywhere but some
    determinant differs from +-1. NonSimple otherwise. Inequalities whose
    tight set is empty or lower-dimensional do not define facets and are
    ignored.
    """
    poly = model.polytope
    n = poly.dim
    if n == 0:
        return SmoothnessClass.DELZANT
    facet_defining = {k for k in range(len(poly.inequalities)) if poly.facet(k).full}
    simple = True
    unimodular = True
    for inc in poly.incidence:
        distinct = sorted({poly.inequalities[k] for k in inc if k in facet_defining})
        if len(distinct) != n:
            simple = False
            break
        det = determinant([u for u, _ in distinct])
        if abs(det) != 1:
            unimodular = False
    if not simple:
        return SmoothnessClass.NON_SIMPLE
    return SmoothnessClass.DELZANT if unimodular else SmoothnessClass.SIMPLE_ONLY
