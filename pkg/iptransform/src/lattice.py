#!/usr/bin/env python
# coding: utf-8

# # Lattices
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---
#
# This module contains exact integer lattice algorithms: Hermite normal form,
# integer spans of point sets, dual lattices and the enumeration of dual coset
# representatives modulo Z^d. All arithmetic is exact.
#
# ---

# ## Load packages and modules

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ._errors import DimensionMismatchError, RankDeficientError
from .linalg import inverse, transpose
from .pointset import IntPointSet
from .vector import denominator_lcm, dot, reduce_mod_one, to_rational_vector


logger = logging.getLogger(__name__)


# ---
# ## Types

@dataclass(frozen=True)
class IntegerLattice:
    """
    An integer lattice given by its row-style Hermite normal form basis.

    Parameters
    ----------
    dim : int
        Ambient dimension d.
    basis : tuple of tuple of int
        r x d basis in Hermite normal form: upper echelon, positive pivots, entries
        above each pivot reduced into [0, pivot).

    Notes
    -----
    Equal lattices have identical bases, so dataclass equality is lattice equality.
    Build instances with hnf() or integer_span() rather than directly.
    """

    dim : int
    basis : tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_full_rank(self) -> bool:
        return self.rank == self.dim

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x != 0) for row in self.basis)

    @property
    def index(self) -> int | None:
        """
        [Z^d : L] = |det basis| for full rank lattices, None otherwise. The HNF is
        triangular, so this is the product of the pivots.
        """

        if not self.is_full_rank:
            return None
        return math.prod(row[p] for row, p in zip(self.basis, self.pivots))


@dataclass(frozen=True)
class DualLattice:
    """
    The dual lattice L* = {xi : <n, xi> in Z for all n in L} of a full rank lattice.

    Parameters
    ----------
    dim : int
        Ambient dimension d.
    basis : tuple of tuple of Fraction
        d x d rational matrix whose rows generate L*.
    denominator : int
        Least common denominator of the basis entries.
    """

    dim : int
    basis : tuple[tuple[Fraction, ...], ...]
    denominator : int


# ---
# ## Hermite normal form

def hnf(rows : Iterable[Sequence[int]],
        dim : int = None) -> IntegerLattice:
    """
    Computes the row-style Hermite normal form of the integer span of the rows.

    Parameters
    ----------
    rows : iterable of sequences of int
        Generators of the lattice. Zero rows are discarded.
    dim : int; default=None
        Ambient dimension; only needed when rows is empty.

    Returns
    -------
    IntegerLattice
        The canonical basis; rank 0 for all-zero input.
    """

    rows = [list(int(x) for x in r) for r in rows]
    if dim is None:
        if len(rows) == 0:
            raise DimensionMismatchError('Cannot infer the dimension of an empty generator list.')
        dim = len(rows[0])
    if any(len(r) != dim for r in rows):
        raise DimensionMismatchError(f'All generators must have dimension {dim}.')
    rows = [r for r in rows if any(r)]

    pivot_row = 0
    for col in range(dim):
        if pivot_row == len(rows):
            break
        # Euclid on the column until a single nonzero entry remains in the pivot row
        while True:
            nonzero = [i for i in range(pivot_row, len(rows)) if rows[i][col] != 0]
            if len(nonzero) == 0:
                break
            i_min = min(nonzero, key=lambda i: abs(rows[i][col]))
            rows[pivot_row], rows[i_min] = rows[i_min], rows[pivot_row]
            pivot = rows[pivot_row]
            cleared = True
            for i in range(pivot_row + 1, len(rows)):
                if rows[i][col] != 0:
                    q = rows[i][col] // pivot[col]
                    rows[i] = [a - q * b for a, b in zip(rows[i], pivot)]
                    if rows[i][col] != 0:
                        cleared = False
            if cleared:
                break
        if rows[pivot_row][col] == 0:
            continue
        if rows[pivot_row][col] < 0:
            rows[pivot_row] = [-a for a in rows[pivot_row]]
        pivot = rows[pivot_row]
        for i in range(pivot_row):
            q = rows[i][col] // pivot[col]
            if q != 0:
                rows[i] = [a - q * b for a, b in zip(rows[i], pivot)]
        pivot_row += 1

    basis = tuple(tuple(r) for r in rows[:pivot_row])
    return IntegerLattice(dim, basis)


def integer_span(points : IntPointSet) -> IntegerLattice:
    """
    The lattice L_S generated by the points themselves (not their differences).

    Parameters
    ----------
    points : IntPointSet
        Nonempty set of integer points.

    Returns
    -------
    IntegerLattice
    """

    if len(points) == 0:
        raise ValueError('The integer span needs at least one point.')
    lattice = hnf(points.points, points.dim)
    logger.debug(f'Integer span of {len(points)} points has rank {lattice.rank} and index {lattice.index}.')
    return lattice


def contains(lattice : IntegerLattice,
             v : Sequence[int]) -> bool:
    """
    Exact membership test by back substitution on the HNF basis.
    """

    if len(v) != lattice.dim:
        raise DimensionMismatchError(f'Vector {tuple(v)} does not have dimension {lattice.dim}.')
    residual = [int(x) for x in v]
    for row, p in zip(lattice.basis, lattice.pivots):
        if any(residual[j] != 0 for j in range(p)):
            return False
        if residual[p] % row[p] != 0:
            return False
        q = residual[p] // row[p]
        residual = [a - q * b for a, b in zip(residual, row)]
    return not any(residual)


# ---
# ## Dual lattices

def _require_full_rank(lattice : IntegerLattice) -> None:
    if not lattice.is_full_rank:
        raise RankDeficientError(f'Lattice has rank {lattice.rank} < {lattice.dim}; its dual is not a lattice.')


def dual_of_generators(rows : Sequence[Sequence[int]]) -> DualLattice:
    """
    Dual lattice of the lattice generated by the rows of an invertible integer
    matrix M: the rows of M^{-T}.

    Raises
    ------
    SingularMatrixError
        If M is singular.
    """

    dual_rows = transpose(inverse(rows))
    basis = tuple(tuple(Fraction(x) for x in row) for row in dual_rows)
    return DualLattice(len(basis), basis, denominator_lcm(x for row in basis for x in row))


def dual_basis(lattice : IntegerLattice) -> DualLattice:
    """
    The canonical dual basis B^{-T} of a full rank lattice with HNF basis B, so that
    B @ (dual basis)^T is the identity.

    Raises
    ------
    RankDeficientError
        If the lattice has rank < d.
    """

    _require_full_rank(lattice)
    return dual_of_generators(lattice.basis)


def in_dual(lattice : IntegerLattice,
            xi : Sequence) -> bool:
    """
    Exact test xi in L*: <b, xi> is an integer for every basis row b.
    """

    xi = to_rational_vector(xi)
    return all(dot(row, xi).denominator == 1 for row in lattice.basis)


def dual_coset_reps(lattice : IntegerLattice) -> list[tuple[Fraction, ...]]:
    """
    Representatives of L*/Z^d reduced into [0, 1)^d, in lexicographic order.

    Parameters
    ----------
    lattice : IntegerLattice
        Full rank lattice.

    Returns
    -------
    list of tuple of Fraction
        Exactly index(L) distinct representatives, including the zero vector.

    Notes
    -----
    The representatives form the finite group generated by the dual basis rows
    modulo Z^d; it is enumerated by closing {0} under adding the generators.
    """

    dual = dual_basis(lattice)
    zero = tuple(Fraction(0) for _ in range(lattice.dim))
    reps = {zero}
    frontier = [zero]
    while frontier:
        new_frontier = []
        for rep in frontier:
            for row in dual.basis:
                candidate = reduce_mod_one(a + b for a, b in zip(rep, row))
                if candidate not in reps:
                    reps.add(candidate)
                    new_frontier.append(candidate)
        frontier = new_frontier
    logger.debug(f'Enumerated {len(reps)} dual coset representatives (index {lattice.index}).')
    return sorted(reps)


def same_rational_lattice(rows_a : Sequence[Sequence],
                          rows_b : Sequence[Sequence]) -> bool:
    """
    Whether two sets of rational generators span the same lattice. Both are scaled
    by a common denominator and compared through their Hermite normal forms.
    """

    rows_a = [to_rational_vector(r) for r in rows_a]
    rows_b = [to_rational_vector(r) for r in rows_b]
    den = denominator_lcm(x for r in rows_a + rows_b for x in r)
    dim = len((rows_a + rows_b)[0])
    scaled_a = [[int(x * den) for x in r] for r in rows_a]
    scaled_b = [[int(x * den) for x in r] for r in rows_b]
    return hnf(scaled_a, dim) == hnf(scaled_b, dim)
