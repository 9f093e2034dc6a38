#!/usr/bin/env python
# coding: utf-8

# # Polytopes
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---
#
# This module contains the exact rational polytope representation: convex hulls
# with facet and affine hull equations, lattice point enumeration, dilation, vertex
# tangent cones and the pulling (fan) triangulations of polytopes and cones.
#
# ---

# ## Load packages and modules

import functools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from ._constants import FAN_RULES, MAX_HULL_DIM
from ._errors import DimensionMismatchError, DimensionTooLargeError, NotFullDimensionalError, NotPointedError
from .linalg import determinant, nullspace, pivot_columns, rank, to_fraction_rows, to_sympy_matrix
from .pointset import IntPointSet
from .vector import RationalVector, IntVector, add, denominator_lcm, dot, primitive_halfspace, \
primitive_integer_vector, scale, subtract, to_rational_vector


logger = logging.getLogger(__name__)


# ---
# ## Types

@dataclass(frozen=True)
class RationalPolytope:
    """
    A polytope with exact rational vertices and its facet representation.
    Build instances with convex_hull().

    Parameters
    ----------
    dim : int
        Ambient dimension d.
    vertices : tuple of tuple of Fraction
        The extreme points in lexicographic order.
    facets : tuple of (tuple of int, Fraction)
        Inequalities <normal, x> <= offset with primitive integer normals. For lower
        dimensional polytopes these are the facets relative to the affine hull.
    equations : tuple of (tuple of int, Fraction)
        Equalities <normal, x> = offset cutting out the affine hull (empty when the
        polytope is full-dimensional).
    affine_dim : int
        Dimension of the affine hull.

    Notes
    -----
    The representation is canonical, so dataclass equality is polytope equality.
    """

    dim : int
    vertices : tuple[RationalVector, ...]
    facets : tuple[tuple[IntVector, Fraction], ...]
    equations : tuple[tuple[IntVector, Fraction], ...]
    affine_dim : int

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.dim

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for v in self.vertices for x in v)

    def contains(self, x : Sequence) -> bool:
        """
        Exact membership test for the closed polytope.
        """

        x = to_rational_vector(x)
        return all(dot(a, x) <= b for a, b in self.facets) and all(dot(a, x) == b for a, b in self.equations)

    def tight_facets(self, x : Sequence) -> list[tuple[IntVector, Fraction]]:
        x = to_rational_vector(x)
        return [(a, b) for a, b in self.facets if dot(a, x) == b]


@dataclass(frozen=True)
class SimplicialCone:
    """
    A simplicial cone apex + cone(generators).

    Parameters
    ----------
    apex : tuple of Fraction
        The apex (a polytope vertex, or the origin).
    generators : tuple of tuple of int
        Linearly independent primitive integer generators.
    det : int
        Absolute determinant of the generator matrix (>= 1).
    """

    apex : RationalVector
    generators : tuple[IntVector, ...]
    det : int


# ---
# ## Internal functions

def _check_dimension(dim : int) -> None:
    if dim > MAX_HULL_DIM:
        raise DimensionTooLargeError(f'Hulls and triangulations are supported up to dimension {MAX_HULL_DIM}, got {dim}.')


def _hyperplane_normal(diffs : list[RationalVector],
                       r : int) -> RationalVector | None:
    """
    Normal of the hyperplane spanned by r - 1 difference vectors in Q^r, or None if
    they are dependent.
    """

    if r == 2:
        (dx, dy), = diffs
        normal = (-dy, dx)
    elif r == 3:
        (a1, a2, a3), (b1, b2, b3) = diffs
        normal = (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)
    else:
        basis = nullspace(diffs, r)
        if len(basis) != 1:
            return None
        normal = basis[0]
    if not any(normal):
        return None
    return normal


def _canonical_equations(diffs : list[RationalVector],
                         origin : RationalVector,
                         dim : int) -> tuple[tuple[IntVector, Fraction], ...]:
    """
    Equations of the affine hull origin + span(diffs) in reduced row echelon form,
    which only depends on the hull.
    """

    normals = nullspace(diffs, dim)
    if len(normals) == 0:
        return ()
    reduced, _ = to_sympy_matrix(normals).rref()
    equations = []
    for row in to_fraction_rows(reduced):
        if any(row):
            normal = primitive_integer_vector(row)
            equations.append((normal, dot(normal, origin)))
    return tuple(sorted(equations))


def _relative_facets(projected : list[RationalVector],
                     r : int) -> list[tuple[RationalVector, Fraction]]:
    """
    Facet inequalities of a full-dimensional point configuration in Q^r.
    """

    if r == 1:
        xs = [q[0] for q in projected]
        return [((Fraction(1), ), max(xs)), ((Fraction(-1), ), -min(xs))]

    facets = []
    for subset in combinations(range(len(projected)), r):
        base = projected[subset[0]]
        diffs = [subtract(projected[i], base) for i in subset[1:]]
        normal = _hyperplane_normal(diffs, r)
        if normal is None:
            continue
        offset = dot(normal, base)
        values = [dot(normal, q) - offset for q in projected]
        if all(v <= 0 for v in values):
            facets.append((normal, offset))
        elif all(v >= 0 for v in values):
            facets.append((tuple(-a for a in normal), -offset))
    return facets


# ---
# ## Convex hulls

def convex_hull(points : Iterable[Sequence]) -> RationalPolytope:
    """
    Computes the convex hull of finitely many rational points.

    Parameters
    ----------
    points : iterable of sequences of int or Fraction or str
        The points; duplicates and non-extreme points are allowed.

    Returns
    -------
    RationalPolytope
        Minimal vertex set, complete facet list (relative to the affine hull) and
        affine hull equations.

    Notes
    -----
    Facets are found by brute force over r-subsets of the points, where r is the
    dimension of the affine hull, after projecting the points bijectively onto the
    pivot coordinates of the affine hull. Only practical for d <= 4 and a few dozen
    points.
    """

    pts = sorted(set(to_rational_vector(p) for p in points))
    if len(pts) == 0:
        raise ValueError('The convex hull needs at least one point.')
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise DimensionMismatchError(f'All points must have dimension {dim}.')
    _check_dimension(dim)

    origin = pts[0]
    diffs = [subtract(p, origin) for p in pts[1:]]
    pivots = pivot_columns(diffs)
    affine_dim = len(pivots)
    equations = _canonical_equations(diffs, origin, dim)

    if affine_dim == 0:
        return RationalPolytope(dim, (origin, ), (), equations, 0)

    projected = [tuple(p[j] for j in pivots) for p in pts]
    facets = set()
    for normal, offset in _relative_facets(projected, affine_dim):
        lifted = [Fraction(0)] * dim
        for j, a in zip(pivots, normal):
            lifted[j] = a
        facets.add(primitive_halfspace(lifted, offset))
    facets = tuple(sorted(facets))

    vertices = []
    for p in pts:
        tight = [a for a, b in facets if dot(a, p) == b]
        if len(tight) >= affine_dim and rank(tight) == affine_dim:
            vertices.append(p)

    logger.debug(f'Hull of {len(pts)} points: {len(vertices)} vertices, {len(facets)} facets, affine dimension {affine_dim}.')
    return RationalPolytope(dim, tuple(vertices), facets, equations, affine_dim)


# ---
# ## Lattice points

def lattice_points(polytope : RationalPolytope) -> IntPointSet:
    """
    Enumerates the integer points of the closed polytope.

    Parameters
    ----------
    polytope : RationalPolytope
        A bounded polytope.

    Returns
    -------
    IntPointSet
        Exactly the integer points satisfying every facet inequality and affine hull
        equation, found by scanning the integer bounding box of the vertices.
    """

    columns = list(zip(*polytope.vertices))
    lows = [math.ceil(min(c)) for c in columns]
    highs = [math.floor(max(c)) for c in columns]
    if any(lo > hi for lo, hi in zip(lows, highs)):
        return IntPointSet.from_points([], polytope.dim)

    axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in zip(lows, highs)]
    grid = np.stack(np.meshgrid(*axes, indexing='ij'), axis=-1).reshape(-1, polytope.dim)

    # <a, x> <= p/q  <=>  q <a, x> <= p, exact in integers
    mask = np.ones(len(grid), dtype=bool)
    for normal, offset in polytope.facets:
        values = grid @ np.array(normal, dtype=np.int64)
        mask &= values * offset.denominator <= offset.numerator
    for normal, offset in polytope.equations:
        values = grid @ np.array(normal, dtype=np.int64)
        mask &= values * offset.denominator == offset.numerator

    return IntPointSet.from_points((tuple(int(x) for x in row) for row in grid[mask]), polytope.dim)


# ---
# ## Transformations

def dilate(polytope : RationalPolytope,
           k : int) -> RationalPolytope:
    """
    The dilate kP for a positive integer k.
    """

    if int(k) < 1:
        raise ValueError(f'Dilation factor must be a positive integer, got {k}.')
    return RationalPolytope(polytope.dim,
                            tuple(scale(v, k) for v in polytope.vertices),
                            tuple((a, b * k) for a, b in polytope.facets),
                            tuple((a, b * k) for a, b in polytope.equations),
                            polytope.affine_dim)


def translate(polytope : RationalPolytope,
              t : Sequence) -> RationalPolytope:
    """
    The translate P + t for a rational vector t.
    """

    t = to_rational_vector(t)
    return RationalPolytope(polytope.dim,
                            tuple(sorted(add(v, t) for v in polytope.vertices)),
                            tuple(sorted((a, b + dot(a, t)) for a, b in polytope.facets)),
                            tuple(sorted((a, b + dot(a, t)) for a, b in polytope.equations)),
                            polytope.affine_dim)


def transform(polytope : RationalPolytope,
              matrix : Sequence[Sequence]) -> RationalPolytope:
    """
    The image {matrix @ x : x in P} under an invertible rational matrix.
    """

    matrix = [to_rational_vector(row) for row in matrix]
    return convex_hull(tuple(dot(row, v) for row in matrix) for v in polytope.vertices)


def vertex_denominator_lcm(polytope : RationalPolytope) -> int:
    """
    The least k >= 1 for which kP is an integer polytope.
    """

    return denominator_lcm(x for v in polytope.vertices for x in v)


def polytope_equal(p : RationalPolytope,
                   q : RationalPolytope) -> bool:
    if p.dim != q.dim:
        raise DimensionMismatchError(f'Cannot compare polytopes of dimensions {p.dim} and {q.dim}.')
    return set(p.vertices) == set(q.vertices)


def is_centrally_symmetric_polytope(polytope : RationalPolytope) -> bool:
    return set(polytope.vertices) == set(tuple(-x for x in v) for v in polytope.vertices)


# ---
# ## Cones and triangulations

def vertex_tangent_cone(polytope : RationalPolytope,
                        vertex : Sequence) -> list[IntVector]:
    """
    Primitive integer directions of the edges of P incident to a vertex.

    Parameters
    ----------
    polytope : RationalPolytope
        A full-dimensional polytope.
    vertex : sequence
        One of its vertices.

    Returns
    -------
    list of tuple of int
        One generator per incident edge, in vertex order of the far endpoints.

    Notes
    -----
    [v, w] is an edge iff the facet normals tight at both v and w have rank d - 1.
    """

    if not polytope.is_full_dimensional:
        raise NotFullDimensionalError(f'Polytope has affine dimension {polytope.affine_dim} < {polytope.dim}.')
    v = to_rational_vector(vertex)
    if v not in polytope.vertices:
        raise ValueError(f'{vertex} is not a vertex of the polytope.')

    tight_v = polytope.tight_facets(v)
    rays = []
    for w in polytope.vertices:
        if w == v:
            continue
        shared = [a for a, b in tight_v if dot(a, w) == b]
        if len(shared) >= polytope.dim - 1 and rank(shared) == polytope.dim - 1:
            rays.append(primitive_integer_vector(subtract(w, v)))
    return rays


def _pulling_triangulation(hull : RationalPolytope,
                           fan : str) -> list[tuple[RationalVector, ...]]:
    vertices = hull.vertices
    if hull.affine_dim == 0:
        return [(vertices[0], )]
    if hull.affine_dim == 1:
        return [tuple(vertices)]
    apex = min(vertices) if fan == 'lex-min' else max(vertices)
    simplices = []
    for normal, offset in hull.facets:
        if dot(normal, apex) == offset:
            continue
        facet_vertices = [w for w in vertices if dot(normal, w) == offset]
        for simplex in _pulling_triangulation(convex_hull(facet_vertices), fan):
            simplices.append((apex, ) + simplex)
    return simplices


def fan_triangulation(polytope : RationalPolytope,
                      fan : str = 'lex-min') -> list[tuple[RationalVector, ...]]:
    """
    Triangulates a polytope by fanning from its lexicographically smallest (or
    largest) vertex over the recursively triangulated facets not containing it.

    Parameters
    ----------
    polytope : RationalPolytope
        Any polytope; simplices have affine_dim + 1 vertices.
    fan : str; default='lex-min'
        'lex-min' or 'lex-max', the vertex order used at every recursion level.

    Returns
    -------
    list of tuple of tuple of Fraction
        Simplices with pairwise disjoint relative interiors covering the polytope.
    """

    if fan not in FAN_RULES:
        raise ValueError(f'Unknown fan rule {fan}; options: {FAN_RULES}.')
    _check_dimension(polytope.dim)
    return _pulling_triangulation(polytope, fan)


def _cone_facet_normals(rays : list[IntVector],
                        dim : int) -> list[RationalVector]:
    """
    Inward normals of the facets of cone(rays).
    """

    normals = set()
    for subset in combinations(rays, dim - 1):
        basis = nullspace(list(subset), dim)
        if len(basis) != 1:
            continue
        normal = basis[0]
        values = [dot(normal, r) for r in rays]
        if all(x >= 0 for x in values):
            normals.add(primitive_integer_vector(normal))
        elif all(x <= 0 for x in values):
            normals.add(primitive_integer_vector(tuple(-a for a in normal)))
    return sorted(normals)


@functools.lru_cache(maxsize=1024)
def _triangulate_cone(rays : tuple[IntVector, ...],
                      apex : RationalVector,
                      fan : str) -> tuple[SimplicialCone, ...]:
    dim = len(rays[0])
    if rank(rays) < dim:
        raise NotPointedError(f'Rays {rays} do not span a full-dimensional cone.')

    # transversal hyperplane <c, x> = 1 meeting every ray
    c = tuple(sum(col) for col in zip(*rays))
    if any(dot(c, r) <= 0 for r in rays):
        normals = _cone_facet_normals(list(rays), dim)
        if len(normals) == 0 or rank(normals) < dim:
            raise NotPointedError(f'Cone generated by {rays} contains a line.')
        c = tuple(sum(col) for col in zip(*normals))
        if any(dot(c, r) <= 0 for r in rays):
            raise NotPointedError(f'Cone generated by {rays} is not pointed.')

    section_points = {scale(r, Fraction(1, dot(c, r))): r for r in rays}
    section = convex_hull(section_points.keys())
    cones = []
    for simplex in _pulling_triangulation(section, fan):
        generators = tuple(section_points[q] for q in simplex)
        det = abs(determinant(generators))
        cones.append(SimplicialCone(apex, generators, int(det)))
    return tuple(cones)


def triangulate_cone(rays : Iterable[Sequence[int]],
                     apex : Sequence = None,
                     fan : str = 'lex-min') -> list[SimplicialCone]:
    """
    Triangulates a pointed full-dimensional cone into simplicial cones.

    Parameters
    ----------
    rays : iterable of sequences of int
        Primitive integer generators; redundant generators are dropped.
    apex : sequence; default=None
        Apex attached to the resulting cones (origin if None).
    fan : str; default='lex-min'
        Vertex order of the fan triangulation of the transversal section.

    Returns
    -------
    list of SimplicialCone
        Cones with disjoint interiors whose union is the input cone.

    Notes
    -----
    The cone is cut by a transversal hyperplane <c, x> = 1 (c is the sum of the rays,
    or the sum of the inward facet normals if that is not positive on every ray),
    the section polytope is fan triangulated and each simplex is lifted back to the
    rays through its vertices.
    """

    rays = tuple(sorted(set(tuple(int(x) for x in r) for r in rays)))
    if len(rays) == 0:
        raise NotPointedError('A cone needs at least one generator.')
    dim = len(rays[0])
    _check_dimension(dim)
    if fan not in FAN_RULES:
        raise ValueError(f'Unknown fan rule {fan}; options: {FAN_RULES}.')
    apex = to_rational_vector(apex) if apex is not None else tuple(Fraction(0) for _ in range(dim))
    return list(_triangulate_cone(rays, apex, fan))
