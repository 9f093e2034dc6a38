#!/usr/bin/env python
# coding: utf-8

# # Command Line Interface Test
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---

# #### Load packages and modules

import json
import os

import pytest


# ### Import packages and modules for unit testing

from iptransform.src._errors import InputFormatError
from iptransform.src.cli import RunConfig, build_parser, dispatch, main, resolve_prec_bits


# ### Setting up packages and modules (optional)

PREC_BITS = 128


# ---
# ## Unit test preparation

# ### Test cases

# command, resource file, extra options, expected exit status
EXIT_STATUS_TEST_CASES = {'points': ('points', 'tetrahedron_polytope.json', {}, 0),
                          'signature': ('signature', 'tetrahedron.json', {}, 0),
                          'polytope_signature': ('signature', 'unit_square.json', {}, 0),
                          'ft_signature': ('ft-signature', 'unit_square.json', {}, 0),
                          'brion': ('brion', 'unit_square.json', {'xi': '1/3,-2/5'}, 0),
                          'brion_lex_max': ('brion', 'unit_square.json', {'xi': '1/3,-2/5', 'fan': 'max'}, 0),
                          'malformed': ('points', 'malformed.json', {}, 2),
                          'missing_file': ('points', 'missing.json', {}, 2),
                          'missing_input': ('points', None, {}, 2),
                          'missing_xi': ('sigma', 'tetrahedron.json', {}, 2),
                          'bad_xi': ('sigma', 'tetrahedron.json', {'xi': '1/2,x,1/2'}, 2),
                          'bad_fan': ('brion', 'unit_square.json', {'xi': '1/3,1/5', 'fan': 'random'}, 2),
                          'relative_on_points': ('sigma', 'tetrahedron.json', {'xi': '0,0,0', 'matrix': '1,0;0,1'}, 2),
                          'polygons_in_3d': ('collide', None, {'corpus': 'polygons', 'dim': 3}, 2),
                          'xi_dimension': ('sigma', 'tetrahedron.json', {'xi': '1/2,1/2'}, 2),
                          'brion_xi_dimension': ('brion', 'unit_square.json', {'xi': '1/3'}, 2),
                          'moduli_dimension': ('dft', 'tetrahedron.json', {'moduli': '4,4'}, 2),
                          'matrix_dimension': ('sigma', 'unit_square.json', {'xi': '0,0', 'matrix': '1,0,0;0,1,0;0,0,1'}, 2),
                          'non_generic': ('brion', 'unit_square.json', {'xi': '0,1'}, 1),
                          'box_overflow': ('dft', 'tetrahedron.json', {'moduli': '2,2,2'}, 1),
                          'relative_singular': ('sigma', 'unit_square.json', {'xi': '0,0', 'matrix': '1,2;2,4'}, 1),
                          }


@pytest.fixture
def create_config(test_resources_dir):
    """
    Builds a RunConfig whose input file lives in the resources directory.
    """

    def _test_case(command, file_name=None, **options):
        input_path = os.path.join(test_resources_dir, file_name) if file_name is not None else None
        return RunConfig(command=command, input_path=input_path, prec_bits=PREC_BITS, **options)

    return _test_case


# ---
# ## Unit test definition

# ### resolve_prec_bits

def test_resolve_prec_bits():
    assert resolve_prec_bits(None, {}) == 256
    assert resolve_prec_bits('128', {}) == 128
    assert resolve_prec_bits(None, {'IPT_PREC_BITS': '96'}) == 96
    assert resolve_prec_bits('512', {'IPT_PREC_BITS': '96'}) == 512
    for raw in ('abc', '32', '1.5'):
        with pytest.raises(InputFormatError):
            resolve_prec_bits(raw, {})
    with pytest.raises(InputFormatError):
        resolve_prec_bits(None, {'IPT_PREC_BITS': '8'})


def test_build_parser():
    args = build_parser().parse_args(['sigma', 'input.json', '--xi', '1/2,1/2', '--prec-bits', '128'])
    assert args.command == 'sigma'
    assert args.input_path == 'input.json'
    assert args.xi == '1/2,1/2'
    assert args.prec_bits == '128'
    assert args.fan == 'lex-min'
    with pytest.raises(SystemExit):
        build_parser().parse_args(['unknown'])


# ### dispatch

@pytest.mark.parametrize('test_case', list(EXIT_STATUS_TEST_CASES.keys()))
def test_dispatch_exit_status(test_case, create_config):
    command, file_name, options, expected = EXIT_STATUS_TEST_CASES[test_case]
    code, payload = dispatch(create_config(command, file_name, **options))
    assert code == expected
    if expected != 0:
        assert set(payload.keys()) == {'error', 'message'}


def test_points(create_config):
    code, payload = dispatch(create_config('points', 'tetrahedron_polytope.json'))
    assert code == 0
    assert payload == {'dim': 3, 'points': [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]}


def test_sigma(create_config):
    """
    Tests the tetrahedron at (1/2, 1/2, 1/2), where every phase is a full turn.
    """

    code, payload = dispatch(create_config('sigma', 'tetrahedron.json', xi='1/2,1/2,1/2'))
    assert code == 0
    assert float(payload['re']) == pytest.approx(4)
    assert float(payload['im']) == pytest.approx(0, abs=1e-30)
    assert payload['xi'] == ['1/2', '1/2', '1/2']
    assert payload['prec_bits'] == PREC_BITS

    code, payload = dispatch(create_config('sigma', 'tetrahedron_polytope.json', xi='0.5,0.5,0.5'))
    assert code == 0
    assert float(payload['re']) == pytest.approx(4)


def test_sigma_relative(create_config):
    """
    Tests lattice-relative counting on the unit square: the lattice generated by the
    columns of diag(1, 2) meets it in two points.
    """

    code, payload = dispatch(create_config('sigma', 'unit_square.json', xi='0,0', matrix='1,0;0,2'))
    assert code == 0
    assert float(payload['re']) == pytest.approx(2)


def test_maxima(create_config):
    code, payload = dispatch(create_config('maxima', 'tetrahedron.json'))
    assert code == 0
    assert payload['index'] == 2
    assert payload['reps'] == [['0', '0', '0'], ['1/2', '1/2', '1/2']]
    assert payload['lattice']['basis'] == [[1, 0, 1], [0, 1, 1], [0, 0, 2]]


def test_spanning(create_config):
    assert dispatch(create_config('spanning', 'tetrahedron_polytope.json')) == (0, {'spanning': False})
    assert dispatch(create_config('spanning', 'tetrahedron.json')) == (0, {'spanning': False})
    assert dispatch(create_config('spanning', 'unit_square.json')) == (0, {'spanning': True})


def test_symmetric(create_config):
    code, payload = dispatch(create_config('symmetric', 'parallelogram.json'))
    assert code == 0
    assert payload['symmetric'] is True
    assert payload['oracle'] is True
    assert payload['k'] == 6

    code, payload = dispatch(create_config('symmetric', 'tetrahedron.json'))
    assert code == 0
    assert payload['symmetric'] is False
    assert payload['oracle'] is False


def test_dft_reconstruct(create_config, tmp_path):
    """
    Tests that the emitted coefficient table is read back by reconstruct.
    """

    code, table = dispatch(create_config('dft', 'tetrahedron.json'))
    assert code == 0
    assert table['moduli'] == [3, 3, 3]
    assert len(table['values']) == 27

    path = tmp_path / 'table.json'
    path.write_text(json.dumps(table))
    code, payload = dispatch(RunConfig(command='reconstruct', input_path=str(path), prec_bits=PREC_BITS))
    assert code == 0
    assert payload == {'dim': 3, 'points': [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]}


def test_collide(create_config):
    code, payload = dispatch(create_config('collide', grid=2, dim=2, table=True))
    assert code == 0
    assert payload['n_items'] == 16
    assert payload['separated'] is True
    assert len(payload['table']) == 16

    code, payload = dispatch(create_config('collide', corpus='polygons', grid=1, fourier=True))
    assert code == 0
    assert payload['n_items'] == 5
    assert payload['separated'] is True


# ### main

def test_main(test_resources_dir, capsys):
    path = os.path.join(test_resources_dir, 'tetrahedron.json')
    assert main(['sigma', path, '--xi', '1/2,1/2,1/2', '--prec-bits', '128']) == 0
    first = capsys.readouterr().out
    payload = json.loads(first)
    assert float(payload['re']) == pytest.approx(4)

    # output is deterministic and stable under a JSON round trip
    assert main(['sigma', path, '--xi', '1/2,1/2,1/2', '--prec-bits', '128']) == 0
    second = capsys.readouterr().out
    assert first == second
    assert json.dumps(json.loads(first), sort_keys=True) == first.strip()


def test_main_errors(test_resources_dir, capsys):
    path = os.path.join(test_resources_dir, 'tetrahedron.json')
    assert main(['sigma', path, '--xi', '1/2,1/2,1/2', '--prec-bits', '32']) == 2
    assert json.loads(capsys.readouterr().out)['error'] == 'InputFormatError'

    assert main(['dft', path, '--moduli', '2,2,2']) == 1
    assert json.loads(capsys.readouterr().out)['error'] == 'BoxOverflowError'
