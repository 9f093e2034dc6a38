#!/usr/bin/env python
# coding: utf-8

# # Finite Fourier Analysis
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---
#
# This module contains the discrete Fourier transform on finite abelian groups
# G = Z/k_1 x ... x Z/k_d, its identification with integer point transforms at the
# rational points -xi/k, and the exact recovery of a point set from its finitely
# many coefficients.
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

from ._constants import DEFAULT_PREC_BITS, GUARD_BITS, INDICATOR_ROUNDING, MAX_GROUP_ORDER
from ._errors import BoxOverflowError, DimensionMismatchError, IdentificationError, NotAnIndicatorError
from .pointset import IntPointSet
from .precision import PrecComplex, check_prec_bits, prec_sum, unit_phase
from .transform import sigma_eval


logger = logging.getLogger(__name__)


# ---
# ## Types

@dataclass(frozen=True)
class GroupSpec:
    """
    The group Z/k_1 x ... x Z/k_d together with its half-open box embedding
    [-k_1/2, k_1/2) x ... x [-k_d/2, k_d/2).

    Parameters
    ----------
    moduli : tuple of int
        Positive moduli (k_1, ..., k_d).

    Notes
    -----
    Group elements are residue tuples (0 <= g_j < k_j), always enumerated in
    row-major order over the moduli.
    """

    moduli : tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'moduli', tuple(int(k) for k in self.moduli))
        if len(self.moduli) == 0 or any(k < 1 for k in self.moduli):
            raise ValueError(f'Moduli must be positive integers, got {self.moduli}.')
        if self.order > MAX_GROUP_ORDER:
            raise ValueError(f'Group order {self.order} exceeds the supported {MAX_GROUP_ORDER}.')

    @property
    def dim(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    @property
    def common_modulus(self) -> int:
        return math.lcm(*self.moduli)

    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(k) for k in self.moduli)))

    def index(self, g : Sequence[int]) -> int:
        """
        Row-major position of a group element (any integer vector is reduced first).
        """

        position = 0
        for x, k in zip(self.to_group(g), self.moduli):
            position = position * k + x
        return position

    def to_group(self, n : Sequence[int]) -> tuple[int, ...]:
        return tuple(int(x) % k for x, k in zip(n, self.moduli))

    def to_box(self, g : Sequence[int]) -> tuple[int, ...]:
        return tuple(x if 2 * x < k else x - k for x, k in zip(self.to_group(g), self.moduli))

    def box_points(self) -> list[tuple[int, ...]]:
        return [self.to_box(g) for g in self.elements()]

    def in_box(self, n : Sequence[int]) -> bool:
        return all(-k <= 2 * x < k for x, k in zip(n, self.moduli))


@dataclass(frozen=True)
class CoefficientTable:
    """
    One finite Fourier coefficient c_xi per group element, in row-major order.

    Parameters
    ----------
    group : GroupSpec
        The group.
    values : tuple of PrecComplex
        The coefficients, len(values) == group.order.
    """

    group : GroupSpec
    values : tuple[PrecComplex, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.group.order:
            raise ValueError(f'Table has {len(self.values)} values for a group of order {self.group.order}.')

    def __getitem__(self, xi : Sequence[int]) -> PrecComplex:
        return self.values[self.group.index(xi)]

    @property
    def prec_bits(self) -> int:
        return max((v.prec_bits for v in self.values), default=DEFAULT_PREC_BITS)

    def __add__(self, other : 'CoefficientTable') -> 'CoefficientTable':
        if self.group != other.group:
            raise DimensionMismatchError('Cannot add tables over different groups.')
        return CoefficientTable(self.group, tuple(a + b for a, b in zip(self.values, other.values)))


# ---
# ## Helper functions

def fits_box(points : IntPointSet,
             group : GroupSpec) -> bool:
    """
    Whether every point lies in the half-open box of the group.
    """

    if points.dim != group.dim:
        raise DimensionMismatchError(f'Point set has dimension {points.dim}, group has dimension {group.dim}.')
    return all(group.in_box(p) for p in points)


def smallest_group(points : IntPointSet) -> GroupSpec:
    """
    Least moduli, coordinate by coordinate, whose half-open box contains the points.
    """

    moduli = []
    for j in range(points.dim):
        need = max((max(-2 * p[j], 2 * p[j] + 1) for p in points), default=1)
        moduli.append(max(1, need))
    return GroupSpec(tuple(moduli))


def evaluation_points(group : GroupSpec) -> list[tuple[Fraction, ...]]:
    """
    The rational points xi / k for xi in the box; the transform values there
    determine any point set inside the box.
    """

    return [tuple(Fraction(x, k) for x, k in zip(n, group.moduli)) for n in group.box_points()]


def _character_phase(n : Sequence[int],
                     xi : Sequence[int],
                     group : GroupSpec) -> Fraction:
    """
    sum_j n_j xi_j / k_j as a single fraction over the common modulus.
    """

    modulus = group.common_modulus
    return Fraction(sum(a * b * (modulus // k) for a, b, k in zip(n, xi, group.moduli)), modulus)


# ---
# ## Transforms

def forward_dft(points : IntPointSet,
                group : GroupSpec,
                prec_bits : int = DEFAULT_PREC_BITS,
                check : bool = True) -> CoefficientTable:
    """
    Finite Fourier transform of the indicator function of a point set.

    Parameters
    ----------
    points : IntPointSet
        The set S, inside the half-open box of the group.
    group : GroupSpec
        The group G.
    prec_bits : int; default=256
        Working precision in bits.
    check : bool; default=True
        If True, asserts c_xi = sigma_S(-xi_1/k_1, ..., -xi_d/k_d) for every xi.

    Returns
    -------
    CoefficientTable
        c_xi = sum_{m in S} e^{-2 pi i (m_1 xi_1 / k_1 + ... + m_d xi_d / k_d)}.

    Raises
    ------
    BoxOverflowError
        If S does not fit the box.
    """

    check_prec_bits(prec_bits)
    if not fits_box(points, group):
        raise BoxOverflowError(f'Point set does not fit into the half-open box of moduli {group.moduli}.')

    values = []
    for xi in group.elements():
        coefficient = prec_sum((unit_phase(-_character_phase(m, xi, group), prec_bits) for m in points), prec_bits)
        if check:
            mapped = tuple(Fraction(-x, k) for x, k in zip(xi, group.moduli))
            if not coefficient.is_close(sigma_eval(points, mapped, prec_bits)):
                raise IdentificationError(f'Coefficient at {xi} differs from the integer point transform at {mapped}.')
        values.append(coefficient)
    logger.debug(f'Forward transform of {len(points)} points over a group of order {group.order}.')
    return CoefficientTable(group, tuple(values))


def inverse_dft(table : CoefficientTable,
                prec_bits : int = None) -> dict[tuple[int, ...], PrecComplex]:
    """
    Inverse finite Fourier transform f(n) = (1/|G|) sum_xi c_xi chi_xi(n).

    Parameters
    ----------
    table : CoefficientTable
        The coefficients.
    prec_bits : int; default=None
        Working precision; defaults to the precision of the table.

    Returns
    -------
    dict
        Maps the box representative of every group element to f(n), in row-major
        group order.
    """

    group = table.group
    prec_bits = check_prec_bits(prec_bits or table.prec_bits)
    elements = group.elements()
    result = {}
    with mpmath.workprec(prec_bits + GUARD_BITS):
        for g in elements:
            n = group.to_box(g)
            total = mpmath.mpc(0)
            for xi, coefficient in zip(elements, table.values):
                total += coefficient.value * unit_phase(_character_phase(n, xi, group), prec_bits)
            result[n] = PrecComplex(total / group.order, prec_bits)
    return result


def reconstruct_set(table : CoefficientTable,
                    prec_bits : int = None) -> IntPointSet:
    """
    Recovers the point set whose indicator function has the given coefficients.

    Raises
    ------
    NotAnIndicatorError
        If some inverse value is farther than 1/4 from both 0 and 1.
    """

    values = inverse_dft(table, prec_bits)
    points = []
    with mpmath.workprec(table.prec_bits + GUARD_BITS):
        threshold = mpmath.mpf(INDICATOR_ROUNDING.numerator) / INDICATOR_ROUNDING.denominator
        for n, value in values.items():
            to_zero, to_one = abs(value.value), abs(value.value - 1)
            if min(to_zero, to_one) > threshold:
                raise NotAnIndicatorError(f'Value {mpmath.nstr(value.value, 8)} at {n} is not close to 0 or 1.')
            if to_one < to_zero:
                points.append(n)
    logger.info(f'Reconstructed {len(points)} points from {table.group.order} coefficients.')
    return IntPointSet.from_points(points, table.group.dim)
