#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Riemannian calculus on a chart, carried by jets.

Index conventions:

* ``dg[a, b, c] = d_c g_ab``
* ``christoffel[k, i, j] = Gamma^k_ij``
* ``riemann[r, s, m, n] = R^r_smn`` with ``R(d_m, d_n) d_s = R^r_smn d_r`` and
  ``R(U, V) = nabla_U nabla_V - nabla_V nabla_U - nabla_[U,V]``
* ``ricci[s, n] = R^m_smn``, positive on round spheres.
"""
from collections import namedtuple
from functools import cached_property

import numpy as np

from .fields import as_field
from ..jets import Jet, einsum, as_jet, stack, power, sqrt, jet_inverse, jet_det
from ..exceptions import DegenerateMetricError

#: squared Cholesky pivots of a metric must exceed this value
CHOLESKY_THRESHOLD = 1e-10

Curvature = namedtuple('Curvature', ['riemann', 'ricci', 'ricci_endomorphism'])
GradientDivergence = namedtuple('GradientDivergence', ['gradient', 'divergence', 'laplacian'])


def check_positive_definite(matrix, point=None):
    """
    Raise :class:`DegenerateMetricError` unless the plain symmetric matrix is positive-definite.

    >>> check_positive_definite([[1.0, 0.0], [0.0, 2.0]])
    >>> check_positive_definite([[1.0, 0.0], [0.0, 0.0]], point=[0.0, 0.0])
    Traceback (most recent call last):
    ...
    sublab.exceptions.DegenerateMetricError: metric is not positive-definite at point (0, 0)
    """
    matrix = np.asarray(matrix, dtype=float)
    try:
        lower = np.linalg.cholesky(matrix)
    except np.linalg.LinAlgError:
        raise DegenerateMetricError('metric is not positive-definite', point=point)
    if np.min(np.diag(lower)) ** 2 <= CHOLESKY_THRESHOLD:
        raise DegenerateMetricError('metric is nearly degenerate', point=point)


def inner(g, u, v):
    """
    ``g(u, v)`` for vector jets or arrays.
    """
    return einsum('a,a->', u, einsum('ab,b->a', g, v))


def christoffel_symbols(g, ginv):
    """
    Levi-Civita symbols from a metric jet and its inverse, one order below the metric.

    :rtype: Jet
    """
    dg = g.gradient()
    lowered = dg.permute('jli->lij') + dg.permute('ilj->lij') - dg.permute('ijl->lij')
    return 0.5 * ginv.contract('kl,lij->kij', lowered)


def riemann_tensor(christoffel):
    """
    Curvature tensor ``R^r_smn`` from Christoffel symbols, one order below them.

    :rtype: Jet
    """
    dchristoffel = christoffel.gradient()
    ret = dchristoffel.permute('rnsm->rsmn') - dchristoffel.permute('rmsn->rsmn')
    ret = ret + christoffel.contract('rml,lns->rsmn', christoffel)
    ret = ret - christoffel.contract('rnl,lms->rsmn', christoffel)
    return ret


def apply_curvature(riemann, u, v, w):
    """
    ``R(u, v) w`` for plain vectors and a plain curvature tensor.

    :rtype: numpy.ndarray
    """
    riemann = riemann.value if isinstance(riemann, Jet) else np.asarray(riemann)
    return np.einsum('lijk,i,j,k->l', riemann, w, u, v)


def orthonormal_frame(g, candidates=None, count=None, point=None):
    """
    Gram-Schmidt over jets, pivoting on the largest order-0 norm of the remaining projected candidates.

    :param g: metric jet
    :param candidates: candidate vectors (jets or arrays), coordinate vectors by default
    :param count: number of frame vectors, all candidates by default
    :return: frame jet whose row r is the r-th frame vector
    :rtype: Jet
    """
    n = g.shape[0]
    basis = g.basis
    if candidates is None:
        candidates = np.eye(n)
    remaining = [as_jet(candidate, basis) for candidate in candidates]
    count = len(remaining) if count is None else count
    frame = []
    for _ in range(count):
        norms = [float(inner(g, v, v).value) for v in remaining]
        best = int(np.argmax(norms))
        if norms[best] <= CHOLESKY_THRESHOLD:
            raise DegenerateMetricError('frame candidates are linearly dependent', point=point)
        vector = remaining.pop(best)
        unit = vector * power(inner(g, vector, vector), -0.5)
        frame.append(unit)
        remaining = [w - inner(g, w, unit) * unit for w in remaining]
    return stack(frame)


class LocalGeometry(object):
    """
    Jets of a metric and of its derived tensors around a point.

    :param metric: metric field
    :type metric: sublab.geometry.MetricField
    :param point: chart coordinates (ignored when x is given)
    :param order: jet order of the metric
    :param x: point jet to evaluate the metric on
    :param christoffel: function of (g, ginv) computing the Christoffel symbols
    """

    def __init__(self, metric, point=None, order=4, x=None, christoffel=None):
        self.metric = metric
        self.x = x if x is not None else metric.chart.lift(point, order=order)
        self.point = np.atleast_1d(np.asarray(self.x.value, dtype=float))
        self.g = metric.evaluate(self.x)
        check_positive_definite(self.g.value, self.point)
        self._christoffel_function = christoffel or christoffel_symbols

    @property
    def dim(self):  # pylint:disable=missing-docstring
        return self.g.shape[0]

    @cached_property
    def ginv(self):  # pylint:disable=missing-docstring
        return jet_inverse(self.g, point=self.point)

    @cached_property
    def christoffel(self):  # pylint:disable=missing-docstring
        return self._christoffel_function(self.g, self.ginv)

    @cached_property
    def riemann(self):  # pylint:disable=missing-docstring
        return riemann_tensor(self.christoffel)

    @cached_property
    def ricci(self):  # pylint:disable=missing-docstring
        return self.riemann.permute('rsrn->sn')

    @cached_property
    def ricci_endomorphism(self):
        """
        ``Ric^a_b``, the Ricci tensor with its first index raised.
        """
        return self.ginv.contract('ab,bc->ac', self.ricci)

    @cached_property
    def volume(self):
        """
        ``sqrt(det g)``.
        """
        return sqrt(jet_det(self.g, point=self.point))

    @cached_property
    def frame(self):
        """
        Orthonormal frame from Gram-Schmidt of the coordinate vectors.
        """
        return orthonormal_frame(self.g, point=self.point)

    def inner(self, u, v):
        """
        ``g(u, v)``.
        """
        return inner(self.g, u, v)

    def norm(self, u):
        """
        Plain g-norm of a vector at the point.

        :rtype: float
        """
        u = np.asarray(u.value if isinstance(u, Jet) else u, dtype=float)
        return float(np.sqrt(max(0.0, float(u @ self.g.value @ u))))

    def covariant_gradient(self, vector):
        """
        ``nabla X`` as ``D[j, k] = d_j X^k + Gamma^k_jl X^l`` for a vector jet X.

        :rtype: Jet
        """
        partial = vector.gradient().permute('kj->jk')
        return partial + self.christoffel.contract('kjl,l->jk', vector)

    def divergence(self, vector):
        """
        ``(1 / sqrt(det g)) d_i (sqrt(det g) X^i)`` for a vector jet X.

        :rtype: Jet
        """
        weighted = vector * self.volume
        return weighted.gradient().permute('ii->') / self.volume

    def gradient(self, function):
        """
        ``(grad f)^k = g^kl d_l f``.

        :rtype: Jet
        """
        return self.ginv.contract('kl,l->k', function.gradient())


def _geometry(metric, point, christoffel=None):
    return LocalGeometry(metric, point, christoffel=christoffel)


def christoffel(metric, point):
    """
    Christoffel symbols ``Gamma^k_ij`` at a point, as jets of order 3.

    :param metric: metric field
    :param point: chart coordinates
    :rtype: Jet
    """
    return _geometry(metric, point).christoffel


def riemann_ricci(metric, point):
    """
    Curvature tensor, Ricci tensor and Ricci endomorphism at a point, as jets of order 2.

    :rtype: Curvature
    """
    geometry = _geometry(metric, point)
    return Curvature(geometry.riemann, geometry.ricci, geometry.ricci_endomorphism)


def lie_bracket(first, second, point, chart=None):
    """
    ``[X, Y]^k = X^j d_j Y^k - Y^j d_j X^k``.

    :param first: vector field X
    :param second: vector field Y
    :param point: chart coordinates
    :rtype: Jet
    """
    chart = chart or first.chart
    x = chart.lift(point)
    first = as_field(first, chart).evaluate(x)
    second = as_field(second, chart).evaluate(x)
    return second.gradient().contract('kj,j->k', first) - first.gradient().contract('kj,j->k', second)


def covariant_derivative(metric, vector, direction, point):
    """
    ``(nabla_dir X)^k = dir^j (d_j X^k + Gamma^k_jl X^l)``.

    :param metric: metric field
    :param vector: vector field X
    :param direction: direction at the point (array or jet)
    :param point: chart coordinates
    :rtype: Jet
    """
    geometry = _geometry(metric, point)
    field = as_field(vector, metric.chart).evaluate(geometry.x)
    return geometry.covariant_gradient(field).contract('jk,j->k', direction)


def gradient_divergence(metric, point, function=None, vector=None):
    """
    Gradient and Laplacian of a function and divergence of a vector field.

    The Laplacian is ``delta d``: ``lap f = -div grad f``, whose spectrum is non negative.

    :param metric: metric field
    :param point: chart coordinates
    :param function: scalar field f (expression text, tree or field), optional
    :param vector: vector field X, optional
    :return: (grad f, div X, lap f); entries are None when their input is missing
    :rtype: GradientDivergence
    """
    geometry = _geometry(metric, point)
    gradient = divergence = laplacian = None
    if function is not None:
        f = as_field(function, metric.chart).evaluate(geometry.x)
        gradient = geometry.gradient(f)
        laplacian = -geometry.divergence(gradient)
    if vector is not None:
        divergence = geometry.divergence(as_field(vector, metric.chart).evaluate(geometry.x))
    return GradientDivergence(gradient, divergence, laplacian)


def killing_residual(metric, vector, point):
    """
    Frobenius norm of ``(L_X g)_ij = g_jk nabla_i X^k + g_ik nabla_j X^k``, zero iff X is Killing at the point.

    :rtype: float
    """
    geometry = _geometry(metric, point)
    field = as_field(vector, metric.chart).evaluate(geometry.x)
    lowered = geometry.covariant_gradient(field).contract('ik,kj->ij', geometry.g)
    lie = lowered + lowered.T
    return float(np.linalg.norm(lie.value))


def einstein_residual(metric, constant, point):
    """
    Frobenius norm of ``Ric^a_b - c delta^a_b``.

    :rtype: float
    """
    geometry = _geometry(metric, point)
    return float(np.linalg.norm(geometry.ricci_endomorphism.value - constant * np.eye(geometry.dim)))


def metric_compatibility_residual(metric, point, christoffel_function=None):
    """
    Largest component of ``nabla g``: ``d_k g_ij - Gamma^l_ki g_lj - Gamma^l_kj g_il``.

    :param christoffel_function: replacement for :func:`christoffel_symbols`, to check a custom connection
    :rtype: float
    """
    geometry = _geometry(metric, point, christoffel=christoffel_function)
    gamma = geometry.christoffel.value
    g = geometry.g.value
    dg = geometry.g.gradient().value
    residual = dg - np.einsum('lki,lj->ijk', gamma, g) - np.einsum('lkj,il->ijk', gamma, g)
    return float(np.max(np.abs(residual)))


def bianchi_residual(metric, point):
    """
    Largest component of ``R^l_ijk + R^l_jki + R^l_kij``.

    :rtype: float
    """
    riemann = _geometry(metric, point).riemann.value
    cyclic = riemann + np.einsum('ljki->lijk', riemann) + np.einsum('lkij->lijk', riemann)
    return float(np.max(np.abs(cyclic)))


def ricci_symmetry_residual(metric, point):
    """
    Largest component of ``Ric - Ric^T``.

    :rtype: float
    """
    ricci = _geometry(metric, point).ricci.value
    return float(np.max(np.abs(ricci - ricci.T)))
