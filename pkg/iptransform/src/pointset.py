#!/usr/bin/env python
# coding: utf-8

# # Point Sets
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---
#
# This module contains the IntPointSet class, the finite sets of integer points on
# which integer point transforms are evaluated.
#
# ---

from dataclasses import dataclass
from typing import Iterable, Sequence

from ._errors import DimensionMismatchError


# ### IntPointSet

@dataclass(frozen=True)
class IntPointSet:
    """
    A finite set of d-dimensional integer points, deduplicated and ordered
    lexicographically. Use IntPointSet.from_points() to build one from arbitrary
    input.

    Parameters
    ----------
    dim : int
        Ambient dimension d.
    points : tuple of tuple of int
        The points in canonical (lexicographic) order without duplicates.
    """

    dim : int
    points : tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise DimensionMismatchError(f'Point sets need dimension >= 1, got {self.dim}.')
        for p in self.points:
            if len(p) != self.dim:
                raise DimensionMismatchError(f'Point {p} does not have dimension {self.dim}.')
        if list(self.points) != sorted(set(self.points)):
            raise ValueError('Points must be deduplicated and sorted; use IntPointSet.from_points().')

    @classmethod
    def from_points(cls,
                    points : Iterable[Sequence[int]],
                    dim : int = None) -> 'IntPointSet':
        """
        Creates a point set from any iterable of integer vectors.

        Parameters
        ----------
        points : iterable of sequences of int
            The points; duplicates are removed.
        dim : int; default=None
            Ambient dimension. Required when points is empty, otherwise inferred.

        Returns
        -------
        IntPointSet
        """

        points = sorted(set(tuple(int(x) for x in p) for p in points))
        if dim is None:
            if len(points) == 0:
                raise DimensionMismatchError('Cannot infer the dimension of an empty point set.')
            dim = len(points[0])
        return cls(dim, tuple(points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, point) -> bool:
        return tuple(point) in self.points

    def negate(self) -> 'IntPointSet':
        return IntPointSet.from_points(((-x for x in p) for p in self.points), self.dim)

    def translate(self, t : Sequence[int]) -> 'IntPointSet':
        return IntPointSet.from_points(((x + y for x, y in zip(p, t)) for p in self.points), self.dim)

    def transform(self, matrix : Sequence[Sequence[int]]) -> 'IntPointSet':
        """
        Image of the set under x -> matrix @ x for an integer d x d matrix.
        """

        if len(matrix) != self.dim or any(len(row) != self.dim for row in matrix):
            raise DimensionMismatchError(f'Matrix is not {self.dim} x {self.dim}.')
        return IntPointSet.from_points((tuple(sum(a * x for a, x in zip(row, p)) for row in matrix)
                                        for p in self.points), self.dim)

    def is_centrally_symmetric(self) -> bool:
        """
        Exact oracle for A = -A.
        """

        return self == self.negate()
