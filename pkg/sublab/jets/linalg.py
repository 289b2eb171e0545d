#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Linear algebra over the jet ring.

Elimination pivots on the magnitudes of the order-0 parts, so a matrix of jets can be solved whenever its plain
value is invertible.

>>> x = lift_point([2.0], order=2)[0]
>>> a = JetMatrix([[x]])
>>> sol = jet_solve(a, stack([1.0], basis=x.basis))
>>> float(sol[0].value), sol[0].derivative((1,)), sol[0].derivative((2,))
(0.5, -0.25, 0.25)
"""
import numpy as np

from .jet import Jet, as_jet, stack, lift_point  # pylint:disable=unused-import
from .functions import reciprocal
from ..exceptions import DegenerateMetricError

#: relative threshold on order-0 pivots below which a matrix is singular
PIVOT_TOLERANCE = 1e-12


class JetMatrix(Jet):
    """
    Rectangular matrix of jets sharing one basis.

    :param rows: nested list of jets/numbers, or a 2-d jet
    :param basis: basis used when rows hold no jet
    """

    def __init__(self, rows, basis=None):
        if isinstance(rows, Jet):
            jet = rows
        else:
            jet = stack(rows, basis=basis)
        if jet.ndim != 2:
            raise ValueError('a jet matrix needs two tensor axes, got shape %s' % (jet.shape,))
        super(JetMatrix, self).__init__(jet.coeffs, jet.basis)

    @property
    def rows(self):  # pylint:disable=missing-docstring
        return self.shape[0]

    @property
    def cols(self):  # pylint:disable=missing-docstring
        return self.shape[1]


def _eliminate(matrix, rhs, point=None):
    """
    Gauss-Jordan elimination with partial pivoting on order-0 magnitudes.

    :return: solution rows (or None when rhs is None) and determinant jet
    """
    n = matrix.shape[0]
    if matrix.shape != (n, n):
        raise ValueError('elimination needs a square matrix, got shape %s' % (matrix.shape,))
    basis = matrix.basis
    width = n
    augmented = matrix
    if rhs is not None:
        rhs = as_jet(rhs, basis)
        basis = rhs.basis
        augmented = as_jet(matrix, basis)
        if rhs.ndim == 1:
            rhs = rhs.reshape(n, 1)
        width = n + rhs.shape[1]
        augmented = Jet(np.concatenate([augmented.coeffs, rhs.coeffs], axis=1), basis)
    rows = [augmented[i] for i in range(n)]
    scale = max(1.0, float(np.max(np.abs(matrix.value))))
    determinant = Jet.constant(1.0, basis)
    for column in range(n):
        magnitudes = [abs(float(rows[r].value[column])) for r in range(column, n)]
        pivot = column + int(np.argmax(magnitudes))
        if magnitudes[pivot - column] <= PIVOT_TOLERANCE * scale:
            raise DegenerateMetricError('singular matrix (pivot %.3g in column %d)'
                                        % (magnitudes[pivot - column], column), point=point)
        if pivot != column:
            rows[column], rows[pivot] = rows[pivot], rows[column]
            determinant = -determinant
        pivot_value = rows[column][column]
        determinant = determinant * pivot_value
        rows[column] = rows[column] * reciprocal(pivot_value)
        for r in range(n):
            if r != column:
                rows[r] = rows[r] - rows[r][column] * rows[column]
    if rhs is None:
        return None, determinant
    solution = Jet(np.stack([row.coeffs[n:width] for row in rows], axis=0), basis)
    return solution, determinant


def jet_solve(matrix, rhs, point=None):
    """
    Solve ``matrix . x = rhs`` over jets.

    :param matrix: square matrix jet
    :type matrix: Jet
    :param rhs: vector jet of shape (n,) or matrix jet of shape (n, k)
    :param point: chart point reported by degenerate-matrix errors
    :return: x, with the shape of rhs
    :rtype: Jet
    """
    rhs_is_vector = np.ndim(rhs.value if isinstance(rhs, Jet) else rhs) == 1
    solution, _ = _eliminate(matrix, rhs, point=point)
    if rhs_is_vector:
        return solution.reshape(solution.shape[0])
    return solution


def jet_inverse(matrix, point=None):
    """
    Inverse of a square matrix jet.

    :rtype: Jet
    """
    n = matrix.shape[0]
    return jet_solve(matrix, Jet.constant(np.eye(n), matrix.basis), point=point)


def jet_det(matrix, point=None):
    """
    Determinant of a square matrix jet.

    :rtype: Jet
    """
    _, determinant = _eliminate(matrix, None, point=point)
    return determinant
