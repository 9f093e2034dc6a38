#!/usr/bin/env python
# coding: utf-8

from .src import IntPointSet, RationalPolytope, PrecComplex, GroupSpec, CoefficientTable, convex_hull, \
lattice_points, integer_span, sigma_eval, signature, maxima_analysis, forward_dft, reconstruct_set, brion_ft, \
ft_signature
