#!/usr/bin/env python
# coding: utf-8

# # Corpora
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---
#
# This module contains generators for the point sets and polytopes used in
# exhaustive desk-scale scans and randomized property runs: subsets of small boxes,
# all lattice polygons of a small square, Reeve tetrahedra, the named examples and
# random rational polytopes.
#
# ---

import itertools
import logging
from fractions import Fraction

import numpy as np

from ._constants import EXAMPLE_POLYTOPE_VERTICES
from .pointset import IntPointSet
from .polytope import RationalPolytope, convex_hull


logger = logging.getLogger(__name__)


def box_subsets(shape : tuple[int, ...]) -> list[IntPointSet]:
    """
    All subsets (including the empty set) of the grid {0..shape_1-1} x ... x
    {0..shape_d-1}, e.g. shape=(3, 3) gives the 512 subsets of the 3 x 3 grid.
    """

    grid = list(itertools.product(*(range(n) for n in shape)))
    subsets = []
    for mask in range(2 ** len(grid)):
        subsets.append(IntPointSet.from_points((p for i, p in enumerate(grid) if mask >> i & 1), len(shape)))
    logger.debug(f'Generated {len(subsets)} subsets of a {shape} grid.')
    return subsets


def lattice_polygons(side : int = 2,
                     full_dimensional : bool = False) -> list[RationalPolytope]:
    """
    All distinct convex hulls of nonempty sets of lattice points of [0, side]^2.

    Parameters
    ----------
    side : int; default=2
        Side length of the square.
    full_dimensional : bool; default=False
        If True, only keeps two-dimensional polygons.

    Returns
    -------
    list of RationalPolytope
        Distinct polygons (points and segments included unless filtered), ordered by
        vertex list.
    """

    grid = list(itertools.product(range(side + 1), repeat=2))
    polygons = {}
    for size in range(1, len(grid) + 1):
        for subset in itertools.combinations(grid, size):
            hull = convex_hull(subset)
            if full_dimensional and not hull.is_full_dimensional:
                continue
            polygons.setdefault(hull.vertices, hull)
    logger.info(f'Found {len(polygons)} distinct lattice polygons in [0, {side}]^2.')
    return [polygons[key] for key in sorted(polygons)]


def reeve_tetrahedron(h : int) -> RationalPolytope:
    """
    conv{(0,0,0), (1,0,0), (0,1,0), (1,1,h)}.
    """

    return convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, h)])


def example_polytope(name : str) -> RationalPolytope:
    """
    One of the named example polytopes ('triangle', 'parallelogram', 'tetrahedron',
    'unit-interval', 'unit-square', 'unit-triangle') or 'reeve-<h>'.
    """

    if name.startswith('reeve-'):
        return reeve_tetrahedron(int(name.split('-')[1]))
    if name not in EXAMPLE_POLYTOPE_VERTICES:
        raise KeyError(f'Unknown example polytope {name}; options: {sorted(EXAMPLE_POLYTOPE_VERTICES)} or reeve-<h>.')
    return convex_hull(EXAMPLE_POLYTOPE_VERTICES[name])


def random_point_set(rng : np.random.Generator,
                     dim : int,
                     size : int,
                     low : int = -2,
                     high : int = 2,
                     symmetric : bool = False) -> IntPointSet:
    """
    Random set of at most size integer points with coordinates in [low, high].
    If symmetric, the set is closed under negation.
    """

    points = [tuple(int(x) for x in rng.integers(low, high + 1, size=dim)) for _ in range(size)]
    if symmetric:
        points += [tuple(-x for x in p) for p in points]
    return IntPointSet.from_points(points, dim)


def random_rational_polytope(rng : np.random.Generator,
                             dim : int,
                             n_points : int = None,
                             max_denominator : int = 3,
                             coordinate_range : int = 2) -> RationalPolytope:
    """
    Convex hull of random rational points, redrawn until full-dimensional.

    Parameters
    ----------
    rng : numpy.random.Generator
        Source of randomness.
    dim : int
        Ambient dimension.
    n_points : int; default=None
        Number of random points (default dim + 2).
    max_denominator : int; default=3
        Denominators are drawn from 1..max_denominator.
    coordinate_range : int; default=2
        Numerators are drawn so coordinates lie in [-coordinate_range, coordinate_range].

    Returns
    -------
    RationalPolytope
    """

    n_points = n_points or dim + 2
    while True:
        points = []
        for _ in range(n_points):
            dens = rng.integers(1, max_denominator + 1, size=dim)
            nums = [int(rng.integers(-coordinate_range * int(q), coordinate_range * int(q) + 1)) for q in dens]
            points.append(tuple(Fraction(n, int(q)) for n, q in zip(nums, dens)))
        hull = convex_hull(points)
        if hull.is_full_dimensional:
            return hull
