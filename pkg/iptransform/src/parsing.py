#!/usr/bin/env python
# coding: utf-8

# # Parsing
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---
#
# This module contains utilities to interpret user input: rational scalars and
# vectors given on the command line, integer matrices and moduli, fan rule aliases,
# and the JSON formats for point sets, polytopes and coefficient tables.
#
# ---

import json
from fractions import Fraction
from pathlib import Path

import mpmath

from ._constants import DEFAULT_PREC_BITS, GUARD_BITS
from ._errors import InputFormatError, IntegerPointTransformError
from .finite_fourier import CoefficientTable, GroupSpec
from .pointset import IntPointSet
from .polytope import RationalPolytope, convex_hull
from .precision import PrecComplex, check_prec_bits


def interpret_rational(token) -> Fraction:
    """
    Interprets a rational scalar.

    Parameters
    ----------
    token : str or int or float
        An integer, a fraction 'p/q' or a decimal string such as '0.25' or '-1e-3'.
        Decimal input is converted exactly ('0.1' becomes 1/10).

    Returns
    -------
    Fraction
    """

    if isinstance(token, bool):
        raise InputFormatError(f'Expected a rational number, got {token!r}.')
    if isinstance(token, float):
        token = repr(token)
    try:
        return Fraction(token.strip() if isinstance(token, str) else token)
    except (ValueError, TypeError, ZeroDivisionError):
        raise InputFormatError(f'Cannot interpret {token!r} as a rational number.') from None


def interpret_integer(token) -> int:
    value = interpret_rational(token)
    if value.denominator != 1:
        raise InputFormatError(f'Expected an integer, got {token!r}.')
    return value.numerator


def interpret_vector(text : str) -> tuple[Fraction, ...]:
    """
    Interprets a comma separated rational vector such as '1/2,1/2,1/2'.
    """

    parts = [p for p in text.replace(' ', '').split(',')]
    if len(parts) == 0 or any(len(p) == 0 for p in parts):
        raise InputFormatError(f'Cannot interpret {text!r} as a vector.')
    return tuple(interpret_rational(p) for p in parts)


def interpret_moduli(text : str) -> tuple[int, ...]:
    """
    Interprets comma separated positive group moduli such as '4,4'.
    """

    moduli = tuple(interpret_integer(p) for p in interpret_vector(text))
    if any(k < 1 for k in moduli):
        raise InputFormatError(f'Moduli must be positive, got {text!r}.')
    return moduli


def interpret_matrix(text : str) -> tuple[tuple[int, ...], ...]:
    """
    Interprets a square integer matrix written row by row, rows separated by
    semicolons: '1,1,0;1,0,1;0,1,1'.
    """

    rows = tuple(tuple(interpret_integer(x) for x in interpret_vector(row)) for row in text.split(';'))
    if any(len(row) != len(rows) for row in rows):
        raise InputFormatError(f'Matrix {text!r} is not square.')
    return rows


def interpret_fan_rule(name : str) -> str:
    """
    Interprets fan rule aliases and translates them to 'lex-min' or 'lex-max'.
    """

    name = name.lower().replace('-', '').replace('_', '').replace(' ', '')
    if name in ('lexmin', 'min', 'smallest', 'first'):
        return 'lex-min'
    elif name in ('lexmax', 'max', 'largest', 'last'):
        return 'lex-max'
    raise InputFormatError(f'Unknown fan rule {name!r}.')


# ---
# ## JSON inputs

def read_json(path : str | Path) -> dict:
    """
    Loads a JSON object from a file.
    """

    try:
        with open(path, 'r') as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InputFormatError(f'Cannot read JSON from {path}: {e}') from None
    if not isinstance(data, dict):
        raise InputFormatError(f'Expected a JSON object in {path}.')
    return data


def _rows(data : dict,
          key : str) -> list:
    rows = data.get(key)
    if not isinstance(rows, list) or any(not isinstance(row, list) for row in rows):
        raise InputFormatError(f'Entry {key!r} must be a list of coordinate lists.')
    return rows


def point_set_from_dict(data : dict) -> IntPointSet:
    """
    Builds a point set from {"points": [[int, ...], ...], "dim": d}; "dim" is only
    needed for the empty set.
    """

    points = [tuple(interpret_integer(x) for x in row) for row in _rows(data, 'points')]
    dim = data.get('dim')
    try:
        return IntPointSet.from_points(points, interpret_integer(dim) if dim is not None else None)
    except (IntegerPointTransformError, ValueError) as e:
        raise InputFormatError(f'Invalid point set: {e}') from None


def polytope_from_dict(data : dict) -> RationalPolytope:
    """
    Builds a polytope from {"vertices": [["p/q", ...], ...]}; any points may be
    given, the polytope is their convex hull.
    """

    vertices = [tuple(interpret_rational(x) for x in row) for row in _rows(data, 'vertices')]
    if len(vertices) == 0:
        raise InputFormatError('A polytope needs at least one vertex.')
    if any(len(v) != len(vertices[0]) for v in vertices):
        raise InputFormatError('Vertices have different dimensions.')
    return convex_hull(vertices)


def read_input(path : str | Path) -> IntPointSet | RationalPolytope:
    """
    Reads a point set ("points") or a polytope ("vertices") from a JSON file.
    """

    data = read_json(path)
    if 'vertices' in data:
        return polytope_from_dict(data)
    elif 'points' in data:
        return point_set_from_dict(data)
    raise InputFormatError(f'{path} contains neither "points" nor "vertices".')


def coefficient_table_from_dict(data : dict) -> CoefficientTable:
    """
    Builds a coefficient table from {"moduli": [...], "prec_bits": N,
    "values": [{"re": str, "im": str}, ...]} with values in row-major order.
    """

    try:
        moduli = tuple(interpret_integer(k) for k in data['moduli'])
        prec_bits = check_prec_bits(interpret_integer(data.get('prec_bits', DEFAULT_PREC_BITS)))
        group = GroupSpec(moduli)
        entries = data['values']
    except (KeyError, TypeError, ValueError) as e:
        raise InputFormatError(f'Invalid coefficient table: {e}') from None
    if not isinstance(entries, list) or len(entries) != group.order:
        raise InputFormatError(f'Expected {group.order} coefficient values for moduli {moduli}.')

    values = []
    with mpmath.workprec(prec_bits + GUARD_BITS):
        for entry in entries:
            try:
                values.append(PrecComplex(mpmath.mpc(mpmath.mpf(str(entry['re'])), mpmath.mpf(str(entry['im']))),
                                          prec_bits))
            except (KeyError, TypeError, ValueError):
                raise InputFormatError(f'Invalid coefficient entry {entry!r}.') from None
    return CoefficientTable(group, tuple(values))


def read_coefficient_table(path : str | Path) -> CoefficientTable:
    return coefficient_table_from_dict(read_json(path))
