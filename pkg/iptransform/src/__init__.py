#!/usr/bin/env python
# coding: utf-8

from .pointset import IntPointSet
from .lattice import IntegerLattice, DualLattice, hnf, integer_span, contains, dual_basis, dual_of_generators, \
dual_coset_reps, in_dual, same_rational_lattice
from .polytope import RationalPolytope, SimplicialCone, convex_hull, lattice_points, dilate, translate, \
polytope_equal, vertex_tangent_cone, triangulate_cone, fan_triangulation
from .precision import PrecComplex
from .transform import SignaturePoint, xi_star, sigma_eval, signature, polytope_signature, maxima_analysis, \
is_absolute_max, is_spanning, central_symmetry_test, sigma_relative, collision_scan
from .finite_fourier import GroupSpec, CoefficientTable, forward_dft, inverse_dft, reconstruct_set
from .brion import BrionTerm, is_generic, brion_ft, simplex_ft_oracle, polytope_ft_oracle, ft_signature
