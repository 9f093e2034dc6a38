#!/usr/bin/env python
# coding: utf-8

# # Precision
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---
#
# This module contains the PrecComplex value type and the arbitrary precision
# helpers (tolerances, exact rational phases, unit exponentials) built on mpmath.
#
# ---

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from ._constants import DEFAULT_PREC_BITS, GUARD_BITS, MIN_PREC_BITS


# ---
# ## Helper functions

def check_prec_bits(prec_bits : int) -> int:
    if int(prec_bits) < MIN_PREC_BITS:
        raise ValueError(f'Precision must be at least {MIN_PREC_BITS} bits, got {prec_bits}.')
    return int(prec_bits)


def tolerance(prec_bits : int) -> mpmath.mpf:
    """
    Equality threshold 2^{-prec_bits/2} used for all PrecComplex comparisons.
    """

    with mpmath.workprec(prec_bits + GUARD_BITS):
        return mpmath.ldexp(mpmath.mpf(1), -(prec_bits // 2))


def to_mpf(x) -> mpmath.mpf:
    """
    Converts an int, Fraction, str or mpmath number to mpf at the current working
    precision. Fractions are divided exactly at that precision.
    """

    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def is_exact(values) -> bool:
    return all(isinstance(x, (int, Fraction)) for x in values)


@functools.lru_cache(maxsize=65536)
def _rational_unit_phase(numerator : int,
                         denominator : int,
                         prec_bits : int) -> mpmath.mpc:
    with mpmath.workprec(prec_bits + GUARD_BITS):
        x = mpmath.mpf(2 * numerator) / denominator
        return mpmath.mpc(mpmath.cospi(x), mpmath.sinpi(x))


def unit_phase(t, prec_bits : int) -> mpmath.mpc:
    """
    Computes e^{2 pi i t}.

    Parameters
    ----------
    t : int or Fraction or mpmath.mpf
        The phase in turns. Rationals are reduced modulo 1 exactly before the
        exponential is taken, so quarter and half turns are exact.
    prec_bits : int
        Working precision in bits (guard bits are added internally).

    Returns
    -------
    mpmath.mpc
    """

    if isinstance(t, (int, Fraction)):
        t = Fraction(t)
        return _rational_unit_phase(t.numerator % t.denominator, t.denominator, prec_bits)
    with mpmath.workprec(prec_bits + GUARD_BITS):
        t = mpmath.mpf(t)
        x = 2 * (t - mpmath.floor(t))
        return mpmath.mpc(mpmath.cospi(x), mpmath.sinpi(x))


def inner_product(n, xi, prec_bits : int):
    """
    <n, xi> exactly when xi is rational, otherwise as mpf at working precision.
    n may be an integer or a rational vector.
    """

    if is_exact(xi):
        return sum((Fraction(a) * Fraction(b) for a, b in zip(n, xi)), Fraction(0))
    with mpmath.workprec(prec_bits + GUARD_BITS):
        return mpmath.fsum(to_mpf(a) * to_mpf(b) for a, b in zip(n, xi))


# ---
# ## PrecComplex

@dataclass(frozen=True)
class PrecComplex:
    """
    An arbitrary precision complex number tagged with its working precision.

    Parameters
    ----------
    value : mpmath.mpc
        The number.
    prec_bits : int; default=256
        Working precision in mantissa bits (>= 64).

    Notes
    -----
    Binary operations run at the maximum precision of both operands.
    """

    value : mpmath.mpc
    prec_bits : int = DEFAULT_PREC_BITS

    def __post_init__(self) -> None:
        check_prec_bits(self.prec_bits)
        if not isinstance(self.value, mpmath.mpc):
            with mpmath.workprec(self.prec_bits + GUARD_BITS):
                object.__setattr__(self, 'value', mpmath.mpc(self.value))

    @classmethod
    def from_parts(cls, re, im, prec_bits : int = DEFAULT_PREC_BITS) -> 'PrecComplex':
        with mpmath.workprec(prec_bits + GUARD_BITS):
            return cls(mpmath.mpc(to_mpf(re), to_mpf(im)), prec_bits)

    @property
    def re(self) -> mpmath.mpf:
        return self.value.real

    @property
    def im(self) -> mpmath.mpf:
        return self.value.imag

    @property
    def tolerance(self) -> mpmath.mpf:
        return tolerance(self.prec_bits)

    def _binary(self, other, op) -> 'PrecComplex':
        if isinstance(other, PrecComplex):
            prec_bits, other_value = max(self.prec_bits, other.prec_bits), other.value
        else:
            prec_bits, other_value = self.prec_bits, other
        with mpmath.workprec(prec_bits + GUARD_BITS):
            if isinstance(other_value, Fraction):
                other_value = to_mpf(other_value)
            return PrecComplex(op(self.value, other_value), prec_bits)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    def __truediv__(self, other):
        return self._binary(other, lambda a, b: a / b)

    def __neg__(self):
        with mpmath.workprec(self.prec_bits + GUARD_BITS):
            return PrecComplex(-self.value, self.prec_bits)

    def __abs__(self) -> mpmath.mpf:
        with mpmath.workprec(self.prec_bits + GUARD_BITS):
            return abs(self.value)

    def conjugate(self) -> 'PrecComplex':
        with mpmath.workprec(self.prec_bits + GUARD_BITS):
            return PrecComplex(mpmath.conj(self.value), self.prec_bits)

    def distance(self, other : 'PrecComplex') -> mpmath.mpf:
        return abs(self - other)

    def is_close(self,
                 other,
                 tol=None) -> bool:
        """
        Whether |self - other| < tol, with tol defaulting to 2^{-prec_bits/2} at the
        larger of both precisions.
        """

        if not isinstance(other, PrecComplex):
            other = PrecComplex.from_parts(other, 0, self.prec_bits)
        if tol is None:
            tol = tolerance(max(self.prec_bits, other.prec_bits))
        return self.distance(other) < tol

    def digits(self) -> int:
        return max(1, math.floor(self.prec_bits / 3))

    def __str__(self) -> str:
        return mpmath.nstr(self.value, 15)


def prec_sum(values, prec_bits : int) -> PrecComplex:
    """
    Sums mpc values in the given order at working precision.
    """

    with mpmath.workprec(prec_bits + GUARD_BITS):
        total = mpmath.mpc(0)
        for v in values:
            total += v
        return PrecComplex(total, prec_bits)
