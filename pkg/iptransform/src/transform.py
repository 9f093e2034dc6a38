#!/usr/bin/env python
# coding: utf-8

# # Integer Point Transform
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---
#
# This module contains the evaluation of integer point transforms
# sigma_S(xi) = sum_{n in S} e^{2 pi i <n, xi>}, the algebraic signature point,
# absolute maxima analysis via dual lattices, the spanning test, the central
# symmetry criterion, lattice-relative transforms and corpus collision scans.
#
# ---

# ## Load packages and modules

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath
import pandas as pd
import sympy
from tqdm import tqdm

from ._constants import DEFAULT_PREC_BITS, GUARD_BITS
from ._errors import DimensionMismatchError, SingularMatrixError
from .lattice import DualLattice, IntegerLattice, dual_basis, dual_coset_reps, integer_span
from .linalg import determinant, inverse
from .pointset import IntPointSet
from .polytope import RationalPolytope, dilate, lattice_points, transform, vertex_denominator_lcm
from .precision import PrecComplex, check_prec_bits, inner_product, is_exact, prec_sum, tolerance, \
to_mpf, unit_phase


logger = logging.getLogger(__name__)


# ---
# ## Signature point

@dataclass(frozen=True)
class SignaturePoint:
    """
    The algebraic evaluation point xi* = (sqrt(2), sqrt(3), ..., sqrt(p_d)) / pi.

    Parameters
    ----------
    dim : int
        Dimension d.
    coords : tuple of mpmath.mpf
        The coordinates, computed with guard bits above prec_bits.
    prec_bits : int
        Working precision the point was built for.
    """

    dim : int
    coords : tuple[mpmath.mpf, ...]
    prec_bits : int

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(int(sympy.prime(j)) for j in range(1, self.dim + 1))

    def max_relative_residual(self) -> mpmath.mpf:
        """
        Largest relative error of (pi * coord_j)^2 against the j-th prime.
        """

        with mpmath.workprec(self.prec_bits + GUARD_BITS):
            return max(abs((mpmath.pi * c) ** 2 - p) / p for c, p in zip(self.coords, self.primes))


def xi_star(d : int,
            prec_bits : int = DEFAULT_PREC_BITS) -> SignaturePoint:
    """
    Builds the signature point for dimension d at the requested precision.
    """

    if d < 1:
        raise ValueError(f'The signature point needs d >= 1, got {d}.')
    check_prec_bits(prec_bits)
    primes = [int(p) for p in sympy.primerange(2, sympy.prime(d) + 1)]
    with mpmath.workprec(prec_bits + GUARD_BITS):
        coords = tuple(mpmath.sqrt(p) / mpmath.pi for p in primes)
    return SignaturePoint(d, coords, prec_bits)


def as_frequency(xi) -> tuple:
    if isinstance(xi, SignaturePoint):
        return xi.coords
    return tuple(Fraction(x) if isinstance(x, (int, str)) else x for x in xi)


# ---
# ## Evaluation

def sigma_eval(points : IntPointSet,
               xi,
               prec_bits : int = DEFAULT_PREC_BITS) -> PrecComplex:
    """
    Evaluates the integer point transform of a finite point set.

    Parameters
    ----------
    points : IntPointSet
        The set S.
    xi : sequence of int/Fraction/str/mpmath.mpf or SignaturePoint
        The frequency. Rational coordinates are honored exactly: each phase <n, xi>
        is reduced modulo 1 before exponentiation.
    prec_bits : int; default=256
        Working precision in bits.

    Returns
    -------
    PrecComplex
        sum_{n in S} e^{2 pi i <n, xi>}, summed in canonical point order.
    """

    check_prec_bits(prec_bits)
    xi = as_frequency(xi)
    if len(xi) != points.dim:
        raise DimensionMismatchError(f'Frequency has dimension {len(xi)}, point set has dimension {points.dim}.')
    return prec_sum((unit_phase(inner_product(n, xi, prec_bits), prec_bits) for n in points), prec_bits)


def signature(points : IntPointSet,
              prec_bits : int = DEFAULT_PREC_BITS) -> PrecComplex:
    """
    The value sigma_S(xi*), which distinguishes distinct finite point sets.
    """

    return sigma_eval(points, xi_star(points.dim, prec_bits), prec_bits)


def summation_error_bound(n_points : int,
                          prec_bits : int) -> mpmath.mpf:
    """
    Bound n * 2^{-prec_bits + 6} on the rounding error of one signature.
    """

    with mpmath.workprec(prec_bits + GUARD_BITS):
        return max(n_points, 1) * mpmath.ldexp(mpmath.mpf(1), -prec_bits + 6)


def polytope_signature(polytope : RationalPolytope,
                       prec_bits : int = DEFAULT_PREC_BITS,
                       k : int = None) -> PrecComplex:
    """
    Signature of the lattice points of kP.

    Parameters
    ----------
    polytope : RationalPolytope
        Any rational polytope.
    prec_bits : int; default=256
        Working precision in bits.
    k : int; default=None
        Dilation factor; kP must be integral. If None, uses the least common
        denominator of the vertex coordinates (1 for integer polytopes).

    Returns
    -------
    PrecComplex
    """

    if k is None:
        k = vertex_denominator_lcm(polytope)
    dilated = dilate(polytope, k)
    if not dilated.is_integral:
        raise ValueError(f'Dilation by {k} does not make the polytope integral.')
    return signature(lattice_points(dilated), prec_bits)


def same_polytope_by_signature(p : RationalPolytope,
                               q : RationalPolytope,
                               prec_bits : int = DEFAULT_PREC_BITS) -> bool:
    """
    Decides P = Q from the signatures of kP and kQ with a common dilation factor.
    """

    if p.dim != q.dim:
        raise DimensionMismatchError(f'Cannot compare polytopes of dimensions {p.dim} and {q.dim}.')
    k = math.lcm(vertex_denominator_lcm(p), vertex_denominator_lcm(q))
    return polytope_signature(p, prec_bits, k).is_close(polytope_signature(q, prec_bits, k))


# ---
# ## Absolute maxima

@dataclass(frozen=True)
class MaximaAnalysis:
    """
    Locations of the absolute maxima |sigma_S(xi)| = |S|: exactly the dual lattice
    of the integer span of S.

    Parameters
    ----------
    lattice : IntegerLattice
        L_S.
    dual : DualLattice
        L_S*.
    reps : tuple of tuple of Fraction
        The inequivalent maxima in [0, 1)^d (one per coset of L_S* / Z^d).
    """

    lattice : IntegerLattice
    dual : DualLattice
    reps : tuple[tuple[Fraction, ...], ...]

    @property
    def count(self) -> int:
        return len(self.reps)


def maxima_analysis(points : IntPointSet) -> MaximaAnalysis:
    """
    Computes L_S, L_S* and the det(L_S) inequivalent absolute maxima.

    Raises
    ------
    RankDeficientError
        If the points do not span a full rank lattice.
    """

    lattice = integer_span(points)
    dual = dual_basis(lattice)
    reps = tuple(dual_coset_reps(lattice))
    logger.info(f'Found {len(reps)} inequivalent absolute maxima for {len(points)} points.')
    return MaximaAnalysis(lattice, dual, reps)


def is_absolute_max(points : IntPointSet,
                    xi,
                    prec_bits : int = DEFAULT_PREC_BITS) -> bool:
    """
    Whether ||sigma_S(xi)| - |S|| < 2^{-prec_bits/2}.
    """

    value = sigma_eval(points, xi, prec_bits)
    with mpmath.workprec(prec_bits + GUARD_BITS):
        return abs(abs(value) - len(points)) < tolerance(prec_bits)


def is_spanning(polytope : RationalPolytope) -> bool:
    """
    Whether the lattice points of an integer polytope span Z^d.
    """

    points = lattice_points(polytope)
    if len(points) == 0:
        return False
    lattice = integer_span(points)
    return lattice.is_full_rank and lattice.index == 1


# ---
# ## Symmetries

def reflect_coordinate(points : IntPointSet,
                       k : int) -> IntPointSet:
    """
    Image of S under negation of coordinate k, so that
    sigma_S(xi_1, .., 1 - xi_k, .., xi_d) = sigma_{reflected S}(xi).
    """

    if not 0 <= k < points.dim:
        raise DimensionMismatchError(f'Coordinate {k} out of range for dimension {points.dim}.')
    matrix = [[(-1 if i == k else 1) if i == j else 0 for j in range(points.dim)] for i in range(points.dim)]
    return points.transform(matrix)


@dataclass(frozen=True)
class SymmetryReport:
    """
    Outcome of the central symmetry criterion.

    Parameters
    ----------
    k : int
        Smallest even k with both A and -A inside [-k/2, k/2)^d.
    symmetric : bool
        Im sigma_A(xi / k) vanishes for every xi in the box.
    weak_symmetric : bool
        Im sigma_A(xi / k) vanishes for every xi in A.
    oracle : bool
        Exact set comparison A = -A.
    max_imag : mpmath.mpf
        Largest |Im sigma_A(xi / k)| over the box.
    """

    k : int
    symmetric : bool
    weak_symmetric : bool
    oracle : bool
    max_imag : mpmath.mpf


def symmetry_box_size(points : IntPointSet) -> int:
    """
    Smallest even k with A and -A inside the half-open box [-k/2, k/2)^d, that is
    k > 2 max |x_j|.
    """

    return 2 * max((abs(x) for p in points for x in p), default=0) + 2


def central_symmetry_report(points : IntPointSet,
                            prec_bits : int = DEFAULT_PREC_BITS) -> SymmetryReport:
    """
    Evaluates the central symmetry criterion over the full group box and over the
    points themselves, and compares both with the exact oracle.
    """

    k = symmetry_box_size(points)
    tol = tolerance(prec_bits)

    def imag_part(xi):
        return abs(sigma_eval(points, [Fraction(x, k) for x in xi], prec_bits).im)

    half = k // 2
    box_imag = [imag_part(xi) for xi in itertools.product(range(-half, half), repeat=points.dim)]
    max_imag = max(box_imag)
    symmetric = max_imag < tol
    weak_symmetric = all(imag_part(xi) < tol for xi in points)
    oracle = points.is_centrally_symmetric()

    if symmetric != oracle:
        logger.warning(f'Central symmetry criterion ({symmetric}) disagrees with set comparison ({oracle}) for k={k}.')
    if weak_symmetric != oracle:
        logger.debug(f'Criterion restricted to the points themselves gives {weak_symmetric}, oracle {oracle}.')
    return SymmetryReport(k, symmetric, weak_symmetric, oracle, max_imag)


def central_symmetry_test(points : IntPointSet,
                          prec_bits : int = DEFAULT_PREC_BITS) -> bool:
    """
    Whether A = -A, decided by the vanishing of Im sigma_A(xi / k) over the group box.
    """

    return central_symmetry_report(points, prec_bits).symmetric


def symmetric_real_form(points : IntPointSet,
                        xi,
                        prec_bits : int = DEFAULT_PREC_BITS) -> mpmath.mpf:
    """
    sum_{m in A} cos(2 pi <m, xi>) for a centrally symmetric A, which equals sigma_A(xi).
    """

    if not points.is_centrally_symmetric():
        raise ValueError('The real form only applies to centrally symmetric sets.')
    xi = as_frequency(xi)
    with mpmath.workprec(prec_bits + GUARD_BITS):
        total = mpmath.mpf(0)
        for m in points:
            t = inner_product(m, xi, prec_bits)
            total += mpmath.cospi(2 * to_mpf(t))
        return total


# ---
# ## Lattice-relative transform

def sigma_relative(polytope : RationalPolytope,
                   matrix : Sequence[Sequence[int]],
                   xi,
                   prec_bits : int = DEFAULT_PREC_BITS) -> PrecComplex:
    """
    Integer point transform of P relative to the lattice M(Z^d).

    Parameters
    ----------
    polytope : RationalPolytope
        The polytope P.
    matrix : d x d integer matrix
        Generator matrix M; the lattice is generated by its columns.
    xi : sequence
        The frequency.
    prec_bits : int; default=256
        Working precision in bits.

    Returns
    -------
    PrecComplex
        sum over n in M(Z^d) and P of e^{2 pi i <n, xi>}, computed as the sum over
        k in M^{-1}(P) and Z^d of e^{2 pi i <k, M^T xi>}.
    """

    d = polytope.dim
    if len(matrix) != d or any(len(row) != d for row in matrix):
        raise DimensionMismatchError(f'Matrix is not {d} x {d}.')
    if determinant(matrix) == 0:
        raise SingularMatrixError(f'Lattice generator matrix {matrix} is singular.')
    preimage = transform(polytope, inverse(matrix))
    xi = as_frequency(xi)
    if len(xi) != d:
        raise DimensionMismatchError(f'Frequency has dimension {len(xi)}, polytope has dimension {d}.')

    if is_exact(xi):
        pulled_back = tuple(sum((matrix[i][j] * Fraction(xi[i]) for i in range(d)), Fraction(0)) for j in range(d))
    else:
        with mpmath.workprec(prec_bits + GUARD_BITS):
            pulled_back = tuple(mpmath.fsum(matrix[i][j] * to_mpf(xi[i]) for i in range(d)) for j in range(d))
    return sigma_eval(lattice_points(preimage), pulled_back, prec_bits)


# ---
# ## Collision scans

@dataclass(frozen=True)
class CollisionReport:
    """
    Smallest pairwise distance between transform values of a corpus.

    Parameters
    ----------
    min_gap : mpmath.mpf or None
        The minimum |value_i - value_j| over i < j (None for fewer than two items).
    pair : tuple of int or None
        The first pair (i, j) attaining the minimum.
    n_items : int
        Corpus size.
    prec_bits : int
        Working precision of the values.
    """

    min_gap : mpmath.mpf | None
    pair : tuple[int, int] | None
    n_items : int
    prec_bits : int

    def is_separated(self, bound) -> bool:
        return self.min_gap is None or self.min_gap > bound


def min_pairwise_gap(values : Sequence[PrecComplex],
                     progress : bool = False) -> CollisionReport:
    """
    Scans all pairs i < j in order and reports the smallest distance.
    """

    prec_bits = max((v.prec_bits for v in values), default=DEFAULT_PREC_BITS)
    best, pair = None, None
    with mpmath.workprec(prec_bits + GUARD_BITS):
        for i in tqdm(range(len(values)), desc='Pairwise gaps', disable=not progress):
            vi = values[i].value
            for j in range(i + 1, len(values)):
                gap = abs(vi - values[j].value)
                if best is None or gap < best:
                    best, pair = gap, (i, j)
    return CollisionReport(best, pair, len(values), prec_bits)


def collision_scan(corpus : Sequence[IntPointSet],
                   prec_bits : int = DEFAULT_PREC_BITS,
                   progress : bool = False) -> CollisionReport:
    """
    Computes the signatures of all point sets in a corpus and the minimum pairwise
    gap between them.

    Parameters
    ----------
    corpus : sequence of IntPointSet
        The point sets, all of the same dimension.
    prec_bits : int; default=256
        Working precision in bits.
    progress : bool; default=False
        Whether to show tqdm progress bars.

    Returns
    -------
    CollisionReport
    """

    logger.info(f'Computing signatures for {len(corpus)} point sets at {prec_bits} bits.')
    values = [signature(s, prec_bits) for s in tqdm(corpus, desc='Signatures', disable=not progress)]
    report = min_pairwise_gap(values, progress)
    logger.info(f'Minimum signature gap {mpmath.nstr(report.min_gap, 10) if report.min_gap is not None else None} at pair {report.pair}.')
    return report


def signature_table(corpus : Sequence[IntPointSet],
                    prec_bits : int = DEFAULT_PREC_BITS) -> pd.DataFrame:
    """
    One row per point set: size, signature (as floats for display) and distance to
    the nearest other signature.
    """

    values = [signature(s, prec_bits) for s in corpus]
    nearest = []
    with mpmath.workprec(prec_bits + GUARD_BITS):
        for i, vi in enumerate(values):
            gaps = [abs(vi.value - vj.value) for j, vj in enumerate(values) if j != i]
            nearest.append(float(min(gaps)) if gaps else float('nan'))
    return pd.DataFrame({'points': [list(map(list, s.points)) for s in corpus],
                         'n_points': [len(s) for s in corpus],
                         're': [float(v.re) for v in values],
                         'im': [float(v.im) for v in values],
                         'nearest_gap': nearest})
