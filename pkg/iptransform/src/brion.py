#!/usr/bin/env python
# coding: utf-8

# # Brion Evaluation
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---
#
# This module contains the evaluation of the continuous Fourier transform of a
# rational polytope as a sum of vertex cone terms, the closed-form simplex transform
# used to validate it, and the single-point polytope signature built on top.
#
# ---

# ## Load packages and modules

import functools
import itertools
import logging
from dataclasses import dataclass
from typing import Sequence

import mpmath
from tqdm import tqdm

from ._constants import DEFAULT_PREC_BITS, GUARD_BITS
from ._errors import CoincidentPhasesError, DegenerateSimplexError, DimensionMismatchError, \
NonGenericDirectionError, NotFullDimensionalError
from .linalg import determinant
from .polytope import RationalPolytope, SimplicialCone, fan_triangulation, triangulate_cone, vertex_tangent_cone
from .precision import PrecComplex, check_prec_bits, inner_product, tolerance, to_mpf, unit_phase
from .transform import CollisionReport, as_frequency, min_pairwise_gap, xi_star
from .vector import RationalVector, subtract, to_rational_vector


logger = logging.getLogger(__name__)


# ---
# ## Vertex cone terms

@dataclass(frozen=True)
class BrionTerm:
    """
    The contribution of one vertex: its tangent cone split into simplicial cones.

    Parameters
    ----------
    vertex : tuple of Fraction
        The vertex v.
    cones : tuple of SimplicialCone
        Simplicial cones with apex v triangulating the tangent cone at v.
    """

    vertex : RationalVector
    cones : tuple[SimplicialCone, ...]


def _require_full_dimensional(polytope : RationalPolytope) -> None:
    if not polytope.is_full_dimensional:
        raise NotFullDimensionalError(f'Polytope has affine dimension {polytope.affine_dim} < {polytope.dim}.')


@functools.lru_cache(maxsize=256)
def _brion_terms(polytope : RationalPolytope,
                 fan : str) -> tuple[BrionTerm, ...]:
    terms = []
    for vertex in polytope.vertices:
        rays = vertex_tangent_cone(polytope, vertex)
        terms.append(BrionTerm(vertex, tuple(triangulate_cone(rays, vertex, fan))))
    logger.debug(f'Built {sum(len(t.cones) for t in terms)} simplicial cones over {len(terms)} vertices.')
    return tuple(terms)


def brion_terms(polytope : RationalPolytope,
                fan : str = 'lex-min') -> list[BrionTerm]:
    """
    Tangent cone decomposition of a full-dimensional polytope, one term per vertex
    in vertex order.

    Parameters
    ----------
    polytope : RationalPolytope
        A full-dimensional polytope of dimension at most 4.
    fan : str; default='lex-min'
        Fan rule for the triangulation of non-simplicial tangent cones.

    Returns
    -------
    list of BrionTerm
    """

    _require_full_dimensional(polytope)
    return list(_brion_terms(polytope, fan))


def is_generic(polytope : RationalPolytope,
               xi,
               prec_bits : int = DEFAULT_PREC_BITS,
               fan : str = 'lex-min') -> bool:
    """
    Whether |<w, xi>| exceeds 2^{-prec_bits/2} for every generator w of every
    vertex cone.
    """

    xi = as_frequency(xi)
    if len(xi) != polytope.dim:
        raise DimensionMismatchError(f'Frequency has dimension {len(xi)}, polytope has dimension {polytope.dim}.')
    tol = tolerance(prec_bits)
    generators = {w for term in brion_terms(polytope, fan) for cone in term.cones for w in cone.generators}
    with mpmath.workprec(prec_bits + GUARD_BITS):
        return all(abs(to_mpf(inner_product(w, xi, prec_bits))) > tol for w in generators)


# ---
# ## Transforms

def brion_ft(polytope : RationalPolytope,
             xi,
             prec_bits : int = DEFAULT_PREC_BITS,
             fan : str = 'lex-min') -> PrecComplex:
    """
    Evaluates the Fourier transform of the indicator function of a polytope,

        int_P e^{-2 pi i <u, xi>} du
            = sum_v e^{-2 pi i <v, xi>} / (2 pi i)^d * sum_j det K_j(v) / prod_k <w_jk(v), xi>,

    where the cones K_j(v) with generators w_jk(v) triangulate the tangent cone at v.

    Parameters
    ----------
    polytope : RationalPolytope
        A full-dimensional polytope of dimension at most 4.
    xi : sequence or SignaturePoint
        A generic frequency; rational coordinates are honored exactly.
    prec_bits : int; default=256
        Working precision in bits.
    fan : str; default='lex-min'
        Fan rule for the vertex cone triangulations.

    Returns
    -------
    PrecComplex

    Raises
    ------
    NonGenericDirectionError
        If some cone generator is orthogonal to xi.
    """

    check_prec_bits(prec_bits)
    xi = as_frequency(xi)
    if not is_generic(polytope, xi, prec_bits, fan):
        raise NonGenericDirectionError(f'A vertex cone generator is orthogonal to the frequency {xi}.')

    with mpmath.workprec(prec_bits + 2 * GUARD_BITS):
        total = mpmath.mpc(0)
        for term in brion_terms(polytope, fan):
            cone_sum = mpmath.mpf(0)
            for cone in term.cones:
                denominator = mpmath.mpf(1)
                for w in cone.generators:
                    denominator *= to_mpf(inner_product(w, xi, prec_bits + GUARD_BITS))
                cone_sum += cone.det / denominator
            phase = inner_product(term.vertex, xi, prec_bits + GUARD_BITS)
            total += unit_phase(-phase, prec_bits + GUARD_BITS) * cone_sum
        value = total / mpmath.mpc(0, 2 * mpmath.pi) ** polytope.dim
    return PrecComplex(value, prec_bits)


def simplex_ft_oracle(vertices : Sequence[Sequence],
                      xi,
                      prec_bits : int = DEFAULT_PREC_BITS) -> PrecComplex:
    """
    Closed-form Fourier transform of a simplex.

    Parameters
    ----------
    vertices : sequence of d + 1 rational vectors
        Affinely independent vertices v_0, ..., v_d.
    xi : sequence or SignaturePoint
        Frequency with pairwise distinct phases t_i = <v_i, xi>.
    prec_bits : int; default=256
        Working precision in bits.

    Returns
    -------
    PrecComplex
        |det(v_1 - v_0, ..., v_d - v_0)| * DD[t_0, ..., t_d](e^{-2 pi i t}) / (-2 pi i)^d.

    Notes
    -----
    The divided difference table is evaluated with two sets of guard bits to absorb
    the cancellation between nearby phases.
    """

    check_prec_bits(prec_bits)
    vertices = [to_rational_vector(v) for v in vertices]
    d = len(vertices) - 1
    if d < 1 or any(len(v) != d for v in vertices):
        raise DimensionMismatchError(f'A {d}-simplex needs {d + 1} vertices in dimension {d}.')
    xi = as_frequency(xi)
    if len(xi) != d:
        raise DimensionMismatchError(f'Frequency has dimension {len(xi)}, simplex has dimension {d}.')

    volume_factor = abs(determinant([subtract(v, vertices[0]) for v in vertices[1:]]))
    if volume_factor == 0:
        raise DegenerateSimplexError(f'Vertices {vertices} are affinely dependent.')

    phases = [inner_product(v, xi, prec_bits + GUARD_BITS) for v in vertices]
    tol = tolerance(prec_bits)
    with mpmath.workprec(prec_bits + 2 * GUARD_BITS):
        for i, j in itertools.combinations(range(d + 1), 2):
            if abs(to_mpf(phases[j] - phases[i])) < tol:
                raise CoincidentPhasesError(f'Vertices {i} and {j} have coincident phases under {xi}.')

        table = [unit_phase(-t, prec_bits + GUARD_BITS) for t in phases]
        for level in range(1, d + 1):
            table = [(table[i + 1] - table[i]) / to_mpf(phases[i + level] - phases[i]) for i in range(d + 1 - level)]
        value = to_mpf(volume_factor) * table[0] / mpmath.mpc(0, -2 * mpmath.pi) ** d
    return PrecComplex(value, prec_bits)


def polytope_ft_oracle(polytope : RationalPolytope,
                       xi,
                       prec_bits : int = DEFAULT_PREC_BITS,
                       fan : str = 'lex-min') -> PrecComplex:
    """
    Fourier transform of a polytope as the sum of closed-form simplex transforms
    over a fan triangulation.
    """

    _require_full_dimensional(polytope)
    simplices = fan_triangulation(polytope, fan)
    logger.debug(f'Summing the simplex transform over {len(simplices)} simplices.')
    with mpmath.workprec(prec_bits + GUARD_BITS):
        total = mpmath.mpc(0)
        for simplex in simplices:
            total += simplex_ft_oracle(simplex, xi, prec_bits).value
    return PrecComplex(total, prec_bits)


# ---
# ## Signatures

def ft_error_bound(prec_bits : int) -> mpmath.mpf:
    """
    Bound 2^{-prec_bits/2 + 8} on the evaluation error of brion_ft.
    """

    with mpmath.workprec(prec_bits + GUARD_BITS):
        return mpmath.ldexp(mpmath.mpf(1), -(prec_bits // 2) + 8)


def ft_signature(polytope : RationalPolytope,
                 prec_bits : int = DEFAULT_PREC_BITS) -> PrecComplex:
    """
    The Fourier transform of a full-dimensional rational polytope at the signature
    point, which distinguishes distinct polytopes.
    """

    point = xi_star(polytope.dim, prec_bits)
    try:
        return brion_ft(polytope, point, prec_bits)
    except NonGenericDirectionError:
        logger.error(f'The signature point is not generic for the polytope with vertices {polytope.vertices}.')
        raise


def ft_collision_scan(polytopes : Sequence[RationalPolytope],
                      prec_bits : int = DEFAULT_PREC_BITS,
                      progress : bool = False) -> CollisionReport:
    """
    Computes ft_signature for every polytope and the minimum pairwise gap.

    Parameters
    ----------
    polytopes : sequence of RationalPolytope
        Full-dimensional polytopes of one dimension.
    prec_bits : int; default=256
        Working precision in bits.
    progress : bool; default=False
        Whether to show tqdm progress bars.

    Returns
    -------
    CollisionReport
    """

    logger.info(f'Computing Fourier signatures for {len(polytopes)} polytopes at {prec_bits} bits.')
    values = [ft_signature(p, prec_bits) for p in tqdm(polytopes, desc='Fourier signatures', disable=not progress)]
    report = min_pairwise_gap(values, progress)
    if report.min_gap is not None:
        logger.info(f'Minimum Fourier signature gap {mpmath.nstr(report.min_gap, 10)} at pair {report.pair}.')
    return report
