"""Finitely generated abelian groups given by integer presentation matrices.

A presentation with g generators and relation matrix A (g rows, one column
per relation) describes the group Z^g modulo the column span of A.  Fitting
ideals of Z are principal, so each one is represented here by its unique
nonnegative generator.

>>> zmod6 = AbelianPresentation(1, IntMatrix.from_rows([[6]]))
>>> structure(zmod6)
GroupStructure(free_rank=0, torsion_factors=(6,))
>>> torsion_number(zmod6, ClassElement((4,)))
2
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Sequence

from .errors import InputError, InternalInvariantError
from .exact_linalg import IntMatrix, minor_gcd, rank, smith_normal_form, solve_integer


@dataclass(frozen=True)
class AbelianPresentation:
    """Z^generators modulo the integer column span of ``relations``."""

    generators: int
    relations: IntMatrix

    def __post_init__(self):
        if self.generators < 0:
            raise InputError("generator count must be nonnegative")
        if self.relations.rows != self.generators:
            raise InputError(
                f"relation matrix has {self.relations.rows} rows for {self.generators} generators"
            )


@dataclass(frozen=True)
class GroupStructure:
    """Isomorphism type Z^free_rank + Z/t_1 + ... with t_1 | t_2 | ..., t_i > 1."""

    free_rank: int
    torsion_factors: tuple

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion_factors)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class ClassElement:
    """A group element written as integer coefficients over the generators."""

    coords: tuple

    def __init__(self, coords: Sequence[int]):
        object.__setattr__(self, "coords", tuple(operator.index(c) for c in coords))


def _check_element(p: AbelianPresentation, e: ClassElement):
    if len(e.coords) != p.generators:
        raise InputError(
            f"element has {len(e.coords)} coordinates for {p.generators} generators"
        )


def structure(p: AbelianPresentation) -> GroupStructure:
    """Invariant-factor decomposition of the presented group."""
    snf = smith_normal_form(p.relations)
    return GroupStructure(
        free_rank=p.generators - snf.rank,
        torsion_factors=tuple(f for f in snf.invariant_factors if f > 1),
    )


def fitting_number(p: AbelianPresentation, i: int) -> int:
    """Nonnegative generator of the i-th Fitting ideal of the group.

    This is the gcd of the (g - i)-minors of the relation matrix; it is 0
    while i is below the free rank, first nonzero at the rank, and the
    successive generators divide each other upward.
    """
    if not 0 <= i <= p.generators:
        raise InputError(f"Fitting index {i} out of range for {p.generators} generators")
    k = p.generators - i
    if k == 0:
        return 1
    if k > p.relations.cols:
        # fewer relations than the requested minor size: the ideal is zero
        return 0
    return minor_gcd(p.relations, k)


def quotient_by(p: AbelianPresentation, e: ClassElement) -> AbelianPresentation:
    """Presentation of the quotient by the cyclic subgroup generated by ``e``."""
    _check_element(p, e)
    return AbelianPresentation(p.generators, p.relations.append_column(e.coords))


def is_zero_class(p: AbelianPresentation, e: ClassElement) -> bool:
    """Whether ``e`` is trivial, i.e. lies in the integer span of the relations."""
    _check_element(p, e)
    return solve_integer(p.relations, e.coords) is not None


def torsion_number(p: AbelianPresentation, omega: ClassElement) -> int:
    """Torsion number of the pair (group, distinguished element ``omega``).

    Let r be the rank of the quotient by ``omega``.  The result is 0 when
    the r-th Fitting numbers of the group and of the quotient agree, and
    the r-th Fitting number of the quotient otherwise.  The result is 0
    exactly when ``omega`` is the zero class; the two routes are checked
    against each other and a mismatch fails loudly.
    """
    reduced = quotient_by(p, omega)
    r = p.generators - rank(reduced.relations)
    fit_full = fitting_number(p, r)
    fit_reduced = fitting_number(reduced, r)
    d = 0 if fit_full == fit_reduced else fit_reduced
    if (d == 0) != is_zero_class(p, omega):
        raise InternalInvariantError(
            "Fitting-ideal torsion number and membership test disagree "
            f"(d={d}, generators={p.generators})"
        )
    return d


def free_presentation(r: int) -> AbelianPresentation:
    """The free group Z^r: r generators and no relations."""
    return AbelianPresentation(r, IntMatrix(r, 0, ()))


def element_gcd(e: ClassElement) -> int:
    """gcd of the absolute coordinate values; 0 for the zero element."""
    return math.gcd(*(abs(c) for c in e.coords))
