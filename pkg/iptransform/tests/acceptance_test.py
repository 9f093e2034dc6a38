#!/usr/bin/env python
# coding: utf-8

# # Acceptance Test
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---
#
# Desk-scale runs over full corpora and large randomized samples. They take minutes
# rather than seconds and are marked slow; deselect them with -m "not slow".
#
# ---

# #### Load packages and modules

from fractions import Fraction

import mpmath
import pytest


# ### Import packages and modules for unit testing

from iptransform.src._errors import CoincidentPhasesError
from iptransform.src.brion import brion_ft, ft_collision_scan, ft_error_bound, is_generic, polytope_ft_oracle
from iptransform.src.corpus import box_subsets, example_polytope, lattice_polygons, random_point_set, \
random_rational_polytope, reeve_tetrahedron
from iptransform.src.finite_fourier import GroupSpec, forward_dft, reconstruct_set
from iptransform.src.lattice import dual_of_generators, integer_span
from iptransform.src.pointset import IntPointSet
from iptransform.src.polytope import lattice_points, translate
from iptransform.src.precision import PrecComplex, to_mpf, tolerance, unit_phase
from iptransform.src.transform import central_symmetry_report, collision_scan, is_spanning, maxima_analysis, \
sigma_eval, summation_error_bound


# ### Setting up packages and modules (optional)

pytestmark = pytest.mark.slow

PREC_BITS = 256
PROPERTY_PREC_BITS = 128


# ---
# ## Unit test preparation

# ### Helper functions

def power_of_two(exponent : int) -> mpmath.mpf:
    with mpmath.workprec(PREC_BITS):
        return mpmath.ldexp(mpmath.mpf(1), exponent)


def interval_ft(x) -> mpmath.mpc:
    with mpmath.workprec(PREC_BITS + 64):
        t = 2 * mpmath.pi * to_mpf(x)
        return (1 - mpmath.expj(-t)) / mpmath.mpc(0, t)


# ### Test cases

TETRAHEDRON = IntPointSet.from_points([(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)])

# minimum pairwise signature gaps over all subsets of a box
BOX_SUBSET_GAPS = {(3, 3): '0.00093575184036417',
                   (2, 2, 2): '0.0093433987177625',
                   }


@pytest.fixture
def create_random_frequency(rng):
    """
    Creates random rational frequencies with denominators up to 12 in [-3, 3]^d.
    """

    def _test_case(dim):
        dens = rng.integers(1, 13, size=dim)
        return tuple(Fraction(int(rng.integers(-3 * q, 3 * q + 1)), int(q)) for q in dens)

    return _test_case


@pytest.fixture
def create_generic_direction(create_random_frequency):
    """
    Draws random rational frequencies until one is generic for both fan rules and
    the simplex oracle is defined on both triangulations.
    """

    def _test_case(polytope, prec_bits):
        while True:
            xi = create_random_frequency(polytope.dim)
            if not all(is_generic(polytope, xi, prec_bits, fan) for fan in ('lex-min', 'lex-max')):
                continue
            try:
                oracles = [polytope_ft_oracle(polytope, xi, prec_bits, fan) for fan in ('lex-min', 'lex-max')]
            except CoincidentPhasesError:
                continue
            return xi, oracles

    return _test_case


@pytest.fixture
def create_signed_permutation(rng):
    def _test_case(dim):
        perm = rng.permutation(dim)
        signs = rng.choice([-1, 1], size=dim)
        return tuple(tuple(int(signs[i]) if j == perm[i] else 0 for j in range(dim)) for i in range(dim))

    return _test_case


# ---
# ## Unit test definition

# ### Lattice invariants of the tetrahedron

def test_tetrahedron_end_to_end():
    analysis = maxima_analysis(TETRAHEDRON)
    assert analysis.lattice.index == 2
    assert analysis.count == 2
    assert analysis.reps == ((0, 0, 0), (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)))

    generators = [(1, 1, 0), (1, 0, 1), (0, 1, 1)]
    assert all(abs(x) == Fraction(1, 2) for row in dual_of_generators(generators).basis for x in row)

    value = sigma_eval(TETRAHEDRON, ('1/2', '1/2', '1/2'), PREC_BITS)
    with mpmath.workprec(PREC_BITS):
        assert abs(abs(value) - 4) < power_of_two(-120)


@pytest.mark.parametrize('h', range(1, 7))
def test_reeve_tetrahedra(h):
    polytope = reeve_tetrahedron(h)
    assert integer_span(lattice_points(polytope)).index == h
    assert is_spanning(polytope) == (h == 1)


# ### Distinct signatures of finite sets

@pytest.mark.parametrize('shape', [(3, 3), (2, 2, 2)])
def test_box_subsets_distinct(shape):
    """
    Tests that all subsets of a small grid have pairwise distinct signatures with a
    minimum gap above the summation error bound, and that the gap is unchanged.
    """

    corpus = box_subsets(shape)
    report = collision_scan(corpus, PREC_BITS)
    assert report.n_items == 2 ** len(corpus[-1])
    bound = summation_error_bound(len(corpus[-1]), PREC_BITS)
    assert report.min_gap > bound
    with mpmath.workprec(PREC_BITS):
        assert abs(report.min_gap - mpmath.mpf(BOX_SUBSET_GAPS[shape])) < mpmath.mpf('1e-12')


def test_lattice_polygons_distinct():
    """
    Tests the integer polygons of [0, 2]^2: distinct polygons have distinct lattice
    point sets and distinct signatures.
    """

    polygons = lattice_polygons(2)
    point_sets = [lattice_points(p) for p in polygons]
    assert len(set(point_sets)) == len(polygons)

    report = collision_scan(point_sets, PREC_BITS)
    assert report.min_gap > summation_error_bound(9, PREC_BITS)


# ### Finite Fourier reconstruction

@pytest.mark.parametrize('moduli', [(4, 4), (4, 4, 4)])
def test_reconstruction(moduli, rng):
    group = GroupSpec(moduli)
    box = group.box_points()
    tol = power_of_two(-120)
    for _ in range(100):
        mask = rng.integers(0, 2, size=len(box)).astype(bool)
        points = IntPointSet.from_points([p for p, keep in zip(box, mask) if keep], group.dim)
        table = forward_dft(points, group, PREC_BITS, check=False)
        for xi in group.elements():
            mapped = [Fraction(-x, k) for x, k in zip(xi, moduli)]
            assert table[xi].is_close(sigma_eval(points, mapped, PREC_BITS), tol)
        assert reconstruct_set(table) == points


# ### Central symmetry

def test_central_symmetry(rng):
    """
    Tests the transform criterion against the exact set comparison on random sets,
    every other one forced symmetric.
    """

    tol = power_of_two(-120)
    for i in range(500):
        dim = 1 + i % 3
        points = random_point_set(rng, dim, int(rng.integers(0, 5)), symmetric=(i % 2 == 0))
        report = central_symmetry_report(points, PREC_BITS)
        assert report.symmetric == report.oracle
        assert (report.max_imag < tol) == report.oracle


# ### Fourier transforms of polytopes

def test_brion_against_oracle(rng, create_generic_direction):
    tol = power_of_two(-100)
    for i in range(50):
        polytope = random_rational_polytope(rng, 1 + i % 3)
        for _ in range(5):
            xi, oracles = create_generic_direction(polytope, PREC_BITS)
            assert brion_ft(polytope, xi, PREC_BITS).is_close(oracles[0], tol)

    for x in (Fraction(1, 3), Fraction(-7, 5)):
        value = brion_ft(example_polytope('unit-interval'), (x, ), PREC_BITS)
        assert value.is_close(PrecComplex(interval_ft(x), PREC_BITS), tol)
    xi = (Fraction(2, 7), Fraction(-1, 3))
    value = brion_ft(example_polytope('unit-square'), xi, PREC_BITS)
    with mpmath.workprec(PREC_BITS + 64):
        expected = interval_ft(xi[0]) * interval_ft(xi[1])
    assert value.is_close(PrecComplex(expected, PREC_BITS), tol)


def test_ft_signature_distinct():
    polygons = lattice_polygons(2, full_dimensional=True)
    report = ft_collision_scan(polygons, PREC_BITS)
    assert report.n_items == len(polygons)
    assert report.is_separated(ft_error_bound(PREC_BITS))


# ### Randomized properties

def test_transform_properties(rng, create_random_frequency, create_signed_permutation):
    """
    Tests the bound |sigma| <= |S|, integer periodicity, conjugation, signed
    permutation covariance and translation covariance of the integer point transform.
    """

    prec_bits = PROPERTY_PREC_BITS
    for i in range(1000):
        dim = 1 + i % 3
        points = random_point_set(rng, dim, int(rng.integers(0, 8)))
        xi = create_random_frequency(dim)
        value = sigma_eval(points, xi, prec_bits)
        with mpmath.workprec(prec_bits + 32):
            assert abs(value) <= len(points) + tolerance(prec_bits)

        shift = tuple(int(x) for x in rng.integers(-3, 4, size=dim))
        assert sigma_eval(points, tuple(a + b for a, b in zip(xi, shift)), prec_bits).is_close(value)
        assert sigma_eval(points, tuple(-x for x in xi), prec_bits).is_close(value.conjugate())

        g = create_signed_permutation(dim)
        pulled = tuple(sum(g[k][j] * xi[k] for k in range(dim)) for j in range(dim))
        assert sigma_eval(points, pulled, prec_bits).is_close(sigma_eval(points.transform(g), xi, prec_bits))

        moved = sigma_eval(points.translate(shift), xi, prec_bits)
        phase = sum((a * b for a, b in zip(shift, xi)), Fraction(0))
        assert moved.is_close(value * unit_phase(phase, prec_bits))


def test_fourier_transform_properties(rng, create_generic_direction):
    """
    Tests triangulation independence, translation covariance and conjugation of the
    polytope Fourier transform.
    """

    prec_bits = PROPERTY_PREC_BITS
    tol = ft_error_bound(prec_bits)
    for i in range(1000):
        polytope = random_rational_polytope(rng, 1 + i % 3)
        xi, oracles = create_generic_direction(polytope, prec_bits)
        value = brion_ft(polytope, xi, prec_bits, 'lex-min')
        assert value.is_close(brion_ft(polytope, xi, prec_bits, 'lex-max'), tol)
        assert oracles[0].is_close(oracles[1], tol)

        t = tuple(Fraction(int(rng.integers(-6, 7)), 2) for _ in range(polytope.dim))
        phase = sum((a * b for a, b in zip(t, xi)), Fraction(0))
        moved = brion_ft(translate(polytope, t), xi, prec_bits)
        assert moved.is_close(value * unit_phase(-phase, prec_bits), tol)

        mirrored = brion_ft(polytope, tuple(-x for x in xi), prec_bits)
        assert mirrored.is_close(value.conjugate(), tol)
