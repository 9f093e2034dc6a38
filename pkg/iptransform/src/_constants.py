#!/usr/bin/env python
# coding: utf-8

# # Constants
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---
#
# This module contains constants used in other parts of the code.
#
# ---

from fractions import Fraction


# ### Precision

DEFAULT_PREC_BITS = 256

MIN_PREC_BITS = 64

# extra mantissa bits for transcendental constants (pi, prime square roots)
GUARD_BITS = 32

PREC_ENV_VAR = 'IPT_PREC_BITS'


# ### Geometry

MAX_HULL_DIM = 4

FAN_RULES = ('lex-min', 'lex-max')

# distance from {0, 1} beyond which an inverse transform value is not an indicator
INDICATOR_ROUNDING = Fraction(1, 4)

# largest group order accepted by the direct finite Fourier transform
MAX_GROUP_ORDER = 4096


# ### Command line

COMMANDS = ('points', 'sigma', 'signature', 'maxima', 'spanning', 'symmetric', 'dft', 'reconstruct',
            'brion', 'ft-signature', 'collide')

CORPORA = ('subsets', 'polygons')


# ### Named polytopes

EXAMPLE_POLYTOPE_VERTICES = {'triangle': ((-1, 0), (1, 0), (0, 1)),
                             'parallelogram': ((1, 0), (1, 2), (-1, 0), (-1, -2)),
                             'tetrahedron': ((0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)),
                             'unit-interval': ((0, ), (1, )),
                             'unit-square': ((0, 0), (1, 0), (0, 1), (1, 1)),
                             'unit-triangle': ((0, 0), (1, 0), (0, 1)),
                             }
