#!/usr/bin/env python
# coding: utf-8

# # Precision Test
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---

# #### Load packages and modules

from fractions import Fraction

import mpmath
import pytest


# ### Import packages and modules for unit testing

from iptransform.src.precision import PrecComplex, prec_sum, tolerance, to_mpf, unit_phase


# ---
# ## Unit test preparation

# ### Test cases

# turns whose phases are exact in both coordinates
EXACT_PHASE_TEST_CASES = {'zero': (Fraction(0), (1, 0)),
                          'quarter': (Fraction(1, 4), (0, 1)),
                          'half': (Fraction(1, 2), (-1, 0)),
                          'three_quarters': (Fraction(-1, 4), (0, -1)),
                          'full_turns': (Fraction(7, 2), (-1, 0)),
                          }


@pytest.fixture
def create_seventh_root():
    """
    Creates e^{2 pi i / 7} at the requested precision.
    """

    def _test_case(prec_bits):
        return PrecComplex(unit_phase(Fraction(1, 7), prec_bits), prec_bits)

    return _test_case


# ---
# ## Unit test definition

# ### Helper functions

def test_tolerance():
    assert tolerance(256) == mpmath.ldexp(1, -128)
    assert tolerance(64) == mpmath.ldexp(1, -32)


def test_to_mpf():
    with mpmath.workprec(256):
        third = to_mpf(Fraction(1, 3))
        assert abs(3 * third - 1) < mpmath.ldexp(1, -250)
    assert to_mpf(5) == 5
    assert to_mpf('0.5') == mpmath.mpf(1) / 2


@pytest.mark.parametrize('test_case', list(EXACT_PHASE_TEST_CASES.keys()))
def test_unit_phase_exact(test_case):
    turns, (re, im) = EXACT_PHASE_TEST_CASES[test_case]
    value = unit_phase(turns, 128)
    assert value.real == re
    assert value.imag == im


# ### PrecComplex

@pytest.mark.parametrize('prec_bits', [64, 256, 1024])
def test_negation_and_conjugation_keep_precision(prec_bits, create_seventh_root):
    """
    Tests that negation and conjugation run at the working precision of the value
    rather than at double precision.
    """

    z = create_seventh_root(prec_bits)
    tol = mpmath.ldexp(1, -prec_bits + 8)
    assert z.conjugate().conjugate().distance(z) < tol
    assert (-(-z)).distance(z) < tol
    assert (z.conjugate() + z).im == 0
    assert (z.conjugate() * z).is_close(1, tol)
    assert (z + (-z)).distance(PrecComplex.from_parts(0, 0, prec_bits)) < tol
    assert z.conjugate().prec_bits == (-z).prec_bits == prec_bits


def test_binary_operations():
    a = PrecComplex.from_parts(1, 2, 128)
    b = PrecComplex.from_parts(Fraction(1, 3), -1, 256)
    assert (a + b).prec_bits == 256
    assert (a * b).is_close(PrecComplex.from_parts(Fraction(7, 3), Fraction(-1, 3), 256))
    assert (a / a).is_close(1)
    assert (a - Fraction(1, 2)).is_close(PrecComplex.from_parts('1/2', 2, 128))
    with pytest.raises(ValueError):
        PrecComplex.from_parts(1, 0, 32)


def test_prec_sum():
    roots = [unit_phase(Fraction(j, 7), 256) for j in range(7)]
    assert prec_sum(roots, 256).is_close(0)
    assert prec_sum([], 128).is_close(0)
