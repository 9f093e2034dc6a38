#!/usr/bin/env python
# coding: utf-8

# # Linear Algebra
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---
#
# This module wraps the exact rational matrix routines of sympy so the rest of the
# package can stay on tuples of fractions.Fraction.
#
# ---

from fractions import Fraction
from typing import Sequence

import sympy

from ._errors import SingularMatrixError


# ---
# ## Conversion

def to_sympy_matrix(rows : Sequence[Sequence],
                    n_cols : int = None) -> sympy.Matrix:
    """
    Builds an exact sympy matrix from rows of ints or Fractions.

    Parameters
    ----------
    rows : sequence of sequences
        The matrix rows.
    n_cols : int; default=None
        Number of columns; only needed when rows is empty.

    Returns
    -------
    sympy.Matrix
    """

    rows = [list(r) for r in rows]
    if len(rows) == 0:
        return sympy.zeros(0, n_cols or 0)
    return sympy.Matrix([[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in r] for r in rows])


def to_fraction(entry) -> Fraction:
    entry = sympy.Rational(entry)
    return Fraction(int(entry.p), int(entry.q))


def to_fraction_rows(matrix : sympy.Matrix) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(to_fraction(matrix[i, j]) for j in range(matrix.cols)) for i in range(matrix.rows))


# ---
# ## Matrix functions

def rank(rows : Sequence[Sequence]) -> int:
    if len(rows) == 0:
        return 0
    return int(to_sympy_matrix(rows).rank())


def determinant(rows : Sequence[Sequence]) -> Fraction:
    return to_fraction(to_sympy_matrix(rows).det())


def inverse(rows : Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    """
    Exact inverse of a square rational matrix.

    Raises
    ------
    SingularMatrixError
        If the determinant vanishes.
    """

    matrix = to_sympy_matrix(rows)
    if matrix.rows != matrix.cols or matrix.det() == 0:
        raise SingularMatrixError(f'Matrix {[list(r) for r in rows]} is not invertible over the rationals.')
    return to_fraction_rows(matrix.inv())


def transpose(rows : Sequence[Sequence]) -> tuple[tuple, ...]:
    return tuple(zip(*rows))


def nullspace(rows : Sequence[Sequence],
              n_cols : int) -> list[tuple[Fraction, ...]]:
    """
    Rational basis of {x : rows @ x = 0}.
    """

    if len(rows) == 0:
        return [tuple(Fraction(int(i == j)) for j in range(n_cols)) for i in range(n_cols)]
    return [tuple(to_fraction(x) for x in vec) for vec in to_sympy_matrix(rows).nullspace()]


def pivot_columns(rows : Sequence[Sequence]) -> tuple[int, ...]:
    """
    Pivot columns of the reduced row echelon form; their count equals the rank.
    """

    if len(rows) == 0:
        return ()
    _, pivots = to_sympy_matrix(rows).rref()
    return tuple(int(p) for p in pivots)


def matmul(a : Sequence[Sequence],
           b : Sequence[Sequence]) -> tuple[tuple, ...]:
    """
    Product of two small exact matrices given as rows.
    """

    b_cols = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), 0) for col in b_cols) for row in a)
