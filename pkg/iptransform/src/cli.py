#!/usr/bin/env python
# coding: utf-8

# # Command Line Interface
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---
#
# This module contains the iptransform command: argument parsing into a RunConfig,
# precision resolution and dispatch of every command to the library. Results are
# printed as JSON on standard output; logs go to standard error.
#
# ---

# ## Load packages and modules

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass

from ._constants import COMMANDS, CORPORA, DEFAULT_PREC_BITS, MIN_PREC_BITS, PREC_ENV_VAR
from ._errors import DimensionMismatchError, InputFormatError, IntegerPointTransformError
from .brion import brion_ft, ft_collision_scan, ft_error_bound, ft_signature
from .corpus import box_subsets, lattice_polygons
from .finite_fourier import GroupSpec, forward_dft, reconstruct_set, smallest_group
from .parsing import interpret_fan_rule, interpret_matrix, interpret_moduli, interpret_vector, \
read_coefficient_table, read_input
from .pointset import IntPointSet
from .polytope import RationalPolytope, convex_hull, lattice_points
from .serialization import coefficient_table_to_dict, collision_to_dict, complex_to_dict, maxima_to_dict, \
point_set_to_dict, rational_to_str, real_to_str, symmetry_to_dict, table_to_records
from .transform import central_symmetry_report, collision_scan, is_spanning, maxima_analysis, \
polytope_signature, sigma_eval, sigma_relative, signature, signature_table, summation_error_bound


logger = logging.getLogger(__name__)


# ---
# ## Configuration

@dataclass(frozen=True)
class RunConfig:
    """
    One parsed invocation.

    Parameters
    ----------
    command : str
        One of COMMANDS.
    input_path : str
        JSON input (point set, polytope or coefficient table); unused by collide.
    prec_bits : int
        Working precision in bits (>= 64).
    xi : str
        Frequency as comma separated rationals or decimals.
    moduli : str
        Group moduli for dft; the smallest fitting group if None.
    matrix : str
        Lattice generator matrix for lattice-relative sigma, rows separated by ';'.
    fan : str
        Fan rule for Brion evaluation.
    corpus : str
        Corpus for collide, one of CORPORA.
    grid : int
        Box side length (subsets) or square side length (polygons).
    dim : int
        Dimension of the subset box.
    table : bool
        If True, collide also emits one row per corpus item.
    fourier : bool
        If True, collide compares Fourier signatures of full-dimensional polygons.
    verbose : bool
        Debug logging and progress bars on standard error.
    """

    command : str
    input_path : str = None
    prec_bits : int = DEFAULT_PREC_BITS
    xi : str = None
    moduli : str = None
    matrix : str = None
    fan : str = 'lex-min'
    corpus : str = 'subsets'
    grid : int = 3
    dim : int = 2
    table : bool = False
    fourier : bool = False
    verbose : bool = False


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='iptransform',
                                     description='Integer point transforms of point sets and rational polytopes.')
    parser.add_argument('command', choices=COMMANDS)
    parser.add_argument('input_path', nargs='?', default=None,
                        help='JSON file with "points", "vertices" or a coefficient table')
    parser.add_argument('--prec-bits', type=str, default=None,
                        help=f'working precision in bits (default ${PREC_ENV_VAR} or {DEFAULT_PREC_BITS})')
    parser.add_argument('--xi', type=str, default=None, help='frequency, e.g. 1/2,1/2,1/2')
    parser.add_argument('--moduli', type=str, default=None, help='group moduli for dft, e.g. 4,4')
    parser.add_argument('--matrix', type=str, default=None, help='lattice generators for sigma, e.g. 1,1;0,2')
    parser.add_argument('--fan', type=str, default='lex-min', help='fan rule: lex-min or lex-max')
    parser.add_argument('--corpus', choices=CORPORA, default='subsets')
    parser.add_argument('--grid', type=int, default=3)
    parser.add_argument('--dim', type=int, default=2)
    parser.add_argument('--table', action='store_true')
    parser.add_argument('--fourier', action='store_true')
    parser.add_argument('--verbose', action='store_true')
    return parser


def resolve_prec_bits(flag : str = None,
                      environ : dict = None) -> int:
    """
    Resolves the precision from the --prec-bits flag, then the IPT_PREC_BITS
    environment variable, then the default.
    """

    environ = os.environ if environ is None else environ
    raw = flag if flag is not None else environ.get(PREC_ENV_VAR)
    if raw is None:
        return DEFAULT_PREC_BITS
    try:
        prec_bits = int(str(raw).strip())
    except ValueError:
        raise InputFormatError(f'Precision must be an integer, got {raw!r}.') from None
    if prec_bits < MIN_PREC_BITS:
        raise InputFormatError(f'Precision must be at least {MIN_PREC_BITS} bits, got {prec_bits}.')
    return prec_bits


# ---
# ## Commands

def _require_input(config : RunConfig) -> IntPointSet | RationalPolytope:
    if config.input_path is None:
        raise InputFormatError(f'Command {config.command} needs an input file.')
    return read_input(config.input_path)


def _as_point_set(item : IntPointSet | RationalPolytope) -> IntPointSet:
    if isinstance(item, RationalPolytope):
        return lattice_points(item)
    return item


def _as_polytope(item : IntPointSet | RationalPolytope) -> RationalPolytope:
    if isinstance(item, IntPointSet):
        if len(item) == 0:
            raise InputFormatError('An empty point set has no convex hull.')
        return convex_hull(item.points)
    return item


def _require_xi(config : RunConfig) -> tuple:
    if config.xi is None:
        raise InputFormatError(f'Command {config.command} needs --xi.')
    return interpret_vector(config.xi)


def _xi_strings(xi : tuple) -> list[str]:
    return [rational_to_str(x) for x in xi]


def _collide(config : RunConfig) -> dict:
    progress = config.verbose
    if config.corpus == 'subsets':
        corpus = box_subsets((config.grid, ) * config.dim)
    else:
        if config.dim != 2:
            raise InputFormatError('The polygons corpus is two-dimensional.')
        polygons = lattice_polygons(config.grid, full_dimensional=config.fourier)
        if config.fourier:
            report = ft_collision_scan(polygons, config.prec_bits, progress)
            result = collision_to_dict(report)
            result['bound'] = real_to_str(ft_error_bound(config.prec_bits), config.prec_bits)
            result['separated'] = report.is_separated(ft_error_bound(config.prec_bits))
            return result
        corpus = [lattice_points(p) for p in polygons]

    report = collision_scan(corpus, config.prec_bits, progress)
    bound = summation_error_bound(max((len(s) for s in corpus), default=1), config.prec_bits)
    result = collision_to_dict(report)
    result['bound'] = real_to_str(bound, config.prec_bits)
    result['separated'] = report.is_separated(bound)
    if config.table:
        result['table'] = table_to_records(signature_table(corpus, config.prec_bits))
    return result


def run_command(config : RunConfig) -> dict:
    """
    Runs one command and returns its JSON payload. Errors propagate.
    """

    command = config.command
    prec_bits = config.prec_bits
    logger.debug(f'Running {command} at {prec_bits} bits.')

    if command == 'collide':
        return _collide(config)
    if command == 'reconstruct':
        if config.input_path is None:
            raise InputFormatError('Command reconstruct needs a coefficient table file.')
        return point_set_to_dict(reconstruct_set(read_coefficient_table(config.input_path)))

    item = _require_input(config)
    if command == 'points':
        return point_set_to_dict(_as_point_set(item))
    elif command == 'sigma':
        xi = _require_xi(config)
        if config.matrix is not None:
            if not isinstance(item, RationalPolytope):
                raise InputFormatError('A lattice-relative transform needs a polytope input.')
            value = sigma_relative(item, interpret_matrix(config.matrix), xi, prec_bits)
        else:
            value = sigma_eval(_as_point_set(item), xi, prec_bits)
        return {**complex_to_dict(value), 'xi': _xi_strings(xi)}
    elif command == 'signature':
        if isinstance(item, RationalPolytope):
            return complex_to_dict(polytope_signature(item, prec_bits))
        return complex_to_dict(signature(item, prec_bits))
    elif command == 'maxima':
        return maxima_to_dict(maxima_analysis(_as_point_set(item)))
    elif command == 'spanning':
        polytope = _as_polytope(item)
        return {'spanning': is_spanning(polytope)}
    elif command == 'symmetric':
        return symmetry_to_dict(central_symmetry_report(_as_point_set(item), prec_bits), prec_bits)
    elif command == 'dft':
        points = _as_point_set(item)
        group = GroupSpec(interpret_moduli(config.moduli)) if config.moduli is not None else smallest_group(points)
        if group.dim != points.dim:
            raise DimensionMismatchError(f'Moduli {group.moduli} do not match dimension {points.dim}.')
        return coefficient_table_to_dict(forward_dft(points, group, prec_bits))
    elif command == 'brion':
        xi = _require_xi(config)
        value = brion_ft(_as_polytope(item), xi, prec_bits, interpret_fan_rule(config.fan))
        return {**complex_to_dict(value), 'xi': _xi_strings(xi)}
    elif command == 'ft-signature':
        return complex_to_dict(ft_signature(_as_polytope(item), prec_bits))
    raise InputFormatError(f'Unknown command {command!r}.')


def dispatch(config : RunConfig) -> tuple[int, dict]:
    """
    Runs a command and maps failures to exit statuses.

    Parameters
    ----------
    config : RunConfig
        The invocation.

    Returns
    -------
    int
        0 on success, 1 on domain errors, 2 on malformed input (including values of the
        wrong dimension).
    dict
        The result, or {"error": <class name>, "message": <text>}.
    """

    try:
        return 0, run_command(config)
    except (InputFormatError, DimensionMismatchError) as e:
        logger.error(f'Malformed input: {e}')
        return 2, {'error': type(e).__name__, 'message': str(e)}
    except (IntegerPointTransformError, ValueError, KeyError) as e:
        logger.error(f'{type(e).__name__}: {e}')
        return 1, {'error': type(e).__name__, 'message': str(e)}


def main(argv : list[str] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr,
                        level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    try:
        prec_bits = resolve_prec_bits(args.prec_bits)
    except InputFormatError as e:
        code, payload = 2, {'error': type(e).__name__, 'message': str(e)}
    else:
        config = RunConfig(command=args.command, input_path=args.input_path, prec_bits=prec_bits, xi=args.xi,
                           moduli=args.moduli, matrix=args.matrix, fan=args.fan, corpus=args.corpus,
                           grid=args.grid, dim=args.dim, table=args.table, fourier=args.fourier,
                           verbose=args.verbose)
        code, payload = dispatch(config)
    print(json.dumps(payload, sort_keys=True))
    return code
