#!/usr/bin/env python
# coding: utf-8

# # Serialization
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---
#
# This module contains utilities that turn results into JSON-ready dictionaries.
# Rationals are written as 'p/q' strings and complex values with prec_bits/3
# significant digits.
#
# ---

from fractions import Fraction
from typing import Sequence

import mpmath
import pandas as pd

from ._constants import GUARD_BITS
from .finite_fourier import CoefficientTable
from .lattice import DualLattice, IntegerLattice
from .pointset import IntPointSet
from .polytope import RationalPolytope
from .precision import PrecComplex
from .transform import CollisionReport, MaximaAnalysis, SymmetryReport


def rational_to_str(x : Fraction) -> str:
    return str(Fraction(x))


def rational_rows(rows : Sequence[Sequence[Fraction]]) -> list[list[str]]:
    return [[rational_to_str(x) for x in row] for row in rows]


def real_to_str(x : mpmath.mpf,
                prec_bits : int) -> str:
    """
    Prints a real number with prec_bits/3 significant digits.
    """

    with mpmath.workprec(prec_bits + GUARD_BITS):
        return mpmath.nstr(x, max(1, prec_bits // 3))


def complex_to_dict(value : PrecComplex) -> dict:
    """
    Returns {"re": str, "im": str, "prec_bits": int}.
    """

    return {'re': real_to_str(value.re, value.prec_bits),
            'im': real_to_str(value.im, value.prec_bits),
            'prec_bits': value.prec_bits}


def point_set_to_dict(points : IntPointSet) -> dict:
    return {'dim': points.dim, 'points': [list(p) for p in points]}


def polytope_to_dict(polytope : RationalPolytope) -> dict:
    """
    Returns the vertex JSON accepted by the polytope reader, plus the facet
    inequalities <normal, x> <= offset and the affine dimension for inspection.
    """

    return {'dim': polytope.dim,
            'affine_dim': polytope.affine_dim,
            'vertices': rational_rows(polytope.vertices),
            'facets': [{'normal': list(a), 'offset': rational_to_str(b)} for a, b in polytope.facets],
            'equations': [{'normal': list(a), 'offset': rational_to_str(b)} for a, b in polytope.equations]}


def lattice_to_dict(lattice : IntegerLattice) -> dict:
    return {'dim': lattice.dim, 'rank': lattice.rank, 'index': lattice.index, 'basis': [list(b) for b in lattice.basis]}


def dual_lattice_to_dict(dual : DualLattice) -> dict:
    return {'basis': rational_rows(dual.basis), 'denominator': dual.denominator}


def maxima_to_dict(analysis : MaximaAnalysis) -> dict:
    return {'index': analysis.lattice.index,
            'lattice': lattice_to_dict(analysis.lattice),
            'dual': dual_lattice_to_dict(analysis.dual),
            'reps': rational_rows(analysis.reps)}


def symmetry_to_dict(report : SymmetryReport,
                     prec_bits : int) -> dict:
    return {'k': report.k,
            'symmetric': report.symmetric,
            'weak_symmetric': report.weak_symmetric,
            'oracle': report.oracle,
            'max_imag': real_to_str(report.max_imag, prec_bits),
            'prec_bits': prec_bits}


def coefficient_table_to_dict(table : CoefficientTable) -> dict:
    """
    Returns the row-major coefficient table JSON read back by reconstruct.
    """

    return {'moduli': list(table.group.moduli),
            'prec_bits': table.prec_bits,
            'values': [{'re': real_to_str(v.re, table.prec_bits), 'im': real_to_str(v.im, table.prec_bits)}
                       for v in table.values]}


def collision_to_dict(report : CollisionReport) -> dict:
    return {'n_items': report.n_items,
            'min_gap': real_to_str(report.min_gap, report.prec_bits) if report.min_gap is not None else None,
            'pair': list(report.pair) if report.pair is not None else None,
            'prec_bits': report.prec_bits}


def table_to_records(table : pd.DataFrame) -> list[dict]:
    return table.to_dict(orient='records')
