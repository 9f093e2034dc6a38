#!/usr/bin/env python
# coding: utf-8

# # Vector
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---
#
# This module contains utilities for exact operations on rational and integer
# vectors. Vectors are plain tuples; rationals are fractions.Fraction.
#
# ---

import math
from fractions import Fraction
from typing import Iterable, Sequence


RationalVector = tuple[Fraction, ...]
IntVector = tuple[int, ...]


def to_rational_vector(values : Iterable) -> RationalVector:
    """
    Converts any iterable of ints, Fractions or rational strings into a tuple of
    Fractions.

    Parameters
    ----------
    values : iterable of int or Fraction or str
        The coordinates.

    Returns
    -------
    tuple of Fraction
        The exact vector.
    """

    return tuple(Fraction(x) for x in values)


def dot(u : Sequence, v : Sequence):
    """
    Inner product of two vectors of equal length. Exact for ints and Fractions;
    mixed with mpmath numbers it returns an mpmath number.
    """

    return sum((a * b for a, b in zip(u, v)), 0)


def add(u : Sequence, v : Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def subtract(u : Sequence, v : Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def scale(v : Sequence, factor) -> tuple:
    return tuple(factor * a for a in v)


def denominator_lcm(values : Iterable[Fraction]) -> int:
    """
    Least common multiple of the denominators of the given rationals (1 for an
    empty input).
    """

    return math.lcm(1, *(Fraction(x).denominator for x in values))


def is_integral(v : Sequence) -> bool:
    return all(Fraction(x).denominator == 1 for x in v)


def primitive_integer_vector(v : Sequence) -> IntVector:
    """
    Scales a nonzero rational vector to the primitive integer vector pointing in the
    same direction.

    Parameters
    ----------
    v : sequence of int or Fraction
        The direction; must not be the zero vector.

    Returns
    -------
    tuple of int
        Integer vector with gcd of entries 1 and positive multiple of v.
    """

    v = to_rational_vector(v)
    den = denominator_lcm(v)
    ints = [int(x * den) for x in v]
    g = math.gcd(*ints)
    if g == 0:
        raise ValueError('The zero vector has no primitive direction.')
    return tuple(x // g for x in ints)


def primitive_halfspace(normal : Sequence, offset) -> tuple[IntVector, Fraction]:
    """
    Rescales the inequality <normal, x> <= offset by a positive factor so that the
    normal becomes a primitive integer vector.
    """

    normal = to_rational_vector(normal)
    primitive = primitive_integer_vector(normal)
    # ratio is the same for every nonzero coordinate
    i = next(j for j, a in enumerate(normal) if a != 0)
    ratio = primitive[i] / normal[i]
    return primitive, Fraction(offset) * ratio


def reduce_mod_one(v : Sequence[Fraction]) -> RationalVector:
    """
    Reduces each coordinate of a rational vector into [0, 1).
    """

    return tuple(Fraction(x) - math.floor(Fraction(x)) for x in v)
