#!/usr/bin/env python
# coding: utf-8

# # Errors
#
# This file is part of the iptransform package. It is released under the Apache
# License Version 2.0. See the README.md file in the repository root directory or
# go to http://www.apache.org/licenses/ for full license details.
#
# ---
#
# This module contains the custom error classes shared by all other modules.
#
# ---

class IntegerPointTransformError(Exception):
    """
    Base class of all errors raised by the iptransform package.
    """

    pass


class InputFormatError(IntegerPointTransformError):
    """
    A custom error class for malformed user input (JSON files, vectors, flags).
    """

    pass


class DimensionMismatchError(IntegerPointTransformError):
    """
    A custom error class for vectors or sets whose dimensions disagree.
    """

    pass


class RankDeficientError(IntegerPointTransformError):
    """
    A custom error class for dual lattice operations on lattices of rank < d.
    """

    pass


class SingularMatrixError(IntegerPointTransformError):
    """
    A custom error class for matrices that are not invertible over the rationals.
    """

    pass


class DimensionTooLargeError(IntegerPointTransformError):
    """
    A custom error class for hull and triangulation requests above the supported
    ambient dimension.
    """

    pass


class NotFullDimensionalError(IntegerPointTransformError):
    """
    A custom error class for operations that need a polytope or cone of full
    dimension.
    """

    pass


class NotPointedError(IntegerPointTransformError):
    """
    A custom error class for cones that contain a line or are not full-dimensional.
    """

    pass


class BoxOverflowError(IntegerPointTransformError):
    """
    A custom error class for point sets that do not fit into the half-open box of a
    finite group.
    """

    pass


class NotAnIndicatorError(IntegerPointTransformError):
    """
    A custom error class for inverse transforms whose values cannot be rounded to
    {0, 1}.
    """

    pass


class IdentificationError(IntegerPointTransformError):
    """
    A custom error class for finite Fourier coefficients that disagree with the
    integer point transform at the mapped rational point.
    """

    pass


class NonGenericDirectionError(IntegerPointTransformError):
    """
    A custom error class for frequencies at which a vertex cone denominator vanishes.
    """

    pass


class DegenerateSimplexError(IntegerPointTransformError):
    """
    A custom error class for simplices whose vertices are affinely dependent.
    """

    pass


class CoincidentPhasesError(IntegerPointTransformError):
    """
    A custom error class for simplex phases that coincide, which the plain divided
    difference cannot handle.
    """

    pass
