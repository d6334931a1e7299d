"""Characteristic numbers of coordinate-rotation loops.

For the loop rotating coordinate a, the normalized constant kappa_a is the
mean of slice a over the polytope, and each coordinate k contributes

    N_k = -n! * ( int_{F_k} s_a dm  -  kappa_a * vol_lattice(F_k) )

with F_k the facet where slice k vanishes and dm its lattice measure. The
-n! factor folds the loop-degree factor -n together with the (n-1)! that
converts lattice facet measure back to the symplectic convention; the total
invariant is the sum over all m coordinates. Integer-weight loops combine
linearly (the invariant is a group homomorphism), never by re-deriving the
facet formula for combined rotations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence, Union

from .delzant import DelzantModel
from .polytope import facet_lattice_volume, integrate_affine, integrate_affine_facet, volume


class Verdict(enum.Enum):
    INFINITE_CYCLIC = "infinite cyclic subgroup in pi_1(Ham)"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class LoopSpec:
    """Integer weight per coordinate; weight c rotates that coordinate c times."""

    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(int(c) for c in self.weights))

    @classmethod
    def coordinate(cls, m: int, index: int) -> "LoopSpec":
        if not 0 <= index < m:
            raise ValueError(f"coordinate index {index} out of range for m={m}")
        return cls(tuple(1 if k == index else 0 for k in range(m)))


@dataclass(frozen=True)
class InvariantReport:
    loop: LoopSpec
    kappa: Fraction
    facet_contributions: tuple[Fraction, ...]
    invariant: Fraction
    verdict: Verdict


def verdict(value: Fraction) -> Verdict:
    """Nonzero certifies an infinite cyclic subgroup; zero proves nothing."""
    return Verdict.INFINITE_CYCLIC if value != 0 else Verdict.INCONCLUSIVE


def normalized_constant(model: DelzantModel, coord: int) -> Fraction:
    """Mean of slice `coord` over the polytope (exact rational)."""
    _check_coord(model, coord)
    return integrate_affine(model.polytope, model.slices[coord]) / volume(model.polytope)


def facet_contribution(model: DelzantModel, coord: int, k: int) -> Fraction:
    """Contribution of coordinate k's facet to the loop rotating `coord`."""
    _check_coord(model, coord)
    _check_coord(model, k)
    kappa = normalized_constant(model, coord)
    return _facet_term(model, coord, k, kappa, factorial(model.dim))


def invariant_coordinate(model: DelzantModel, coord: int) -> InvariantReport:
    """Full report for the loop rotating one coordinate."""
    _check_coord(model, coord)
    kappa = normalized_constant(model, coord)
    fact = factorial(model.dim)
    contributions = tuple(_facet_term(model, coord, k, kappa, fact)
                          for k in range(model.m))
    total = sum(contributions, Fraction(0))
    return InvariantReport(LoopSpec.coordinate(model.m, coord), kappa,
                           contributions, total, verdict(total))


def invariant_loop(model: DelzantModel,
                   loop: Union[LoopSpec, Sequence[int]]) -> InvariantReport:
    """Invariant of an integer-weight loop by linearity over coordinates."""
    chosen = loop if isinstance(loop, LoopSpec) else LoopSpec(tuple(loop))
    if len(chosen.weights) != model.m:
        raise ValueError(f"loop weights must have length m={model.m}")
    kappa = Fraction(0)
    contributions = [Fraction(0)] * model.m
    for coord, weight in enumerate(chosen.weights):
        if weight == 0:
            continue
        rep = invariant_coordinate(model, coord)
        kappa += weight * rep.kappa
        contributions = [acc + weight * x
                         for acc, x in zip(contributions, rep.facet_contributions)]
    total = sum(contributions, Fraction(0))
    return InvariantReport(chosen, kappa, tuple(contributions), total, verdict(total))


def _facet_term(model: DelzantModel, coord: int, k: int,
                kappa: Fraction, fact: int) -> Fraction:
    facet = model.facet_of_coord(k)
    if facet is None or not facet.full:
        return Fraction(0)
    s = model.slices[coord]
    return -fact * (integrate_affine_facet(facet, s)
                    - kappa * facet_lattice_volume(facet))


def _check_coord(model: DelzantModel, coord: int) -> None:
    if not 0 <= coord < model.m:
        raise ValueError(f"coordinate index {coord} out of range for m={model.m}")
