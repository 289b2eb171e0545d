#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Einstein data and the residuals of the systems ``lap X = c X, nabla_X X = 0`` and of eigenfunction gradients.
"""
import logging
from collections import namedtuple
from dataclasses import dataclass

import numpy as np

from .submersion import submersion_jets
from ..geometry import as_field
from ..maps import SmoothMap, MapJets, normalized
from ..exceptions import EinsteinCheckError, ModelBuildError

logger = logging.getLogger(__name__)

#: largest accepted ``|Ric - c Id|`` before the Einstein constant is trusted
EINSTEIN_TOLERANCE = 1e-8

EinsteinResiduals = namedtuple('EinsteinResiduals', ['r1', 'r2', 'base'])
ObataResiduals = namedtuple('ObataResiduals', ['eigres', 'eigres_lambda1', 'jres', 'r1', 'r2', 'base'])


@dataclass(frozen=True)
class EinsteinData:
    """
    Einstein constant and first eigenvalue of a base manifold.

    :param c: Einstein constant, ``Ric = c Id``
    :param lambda1: first non zero eigenvalue of the Laplacian
    :param strict: raise when the Einstein check fails, report only otherwise
    """
    c: float
    lambda1: float = None
    strict: bool = True

    def __post_init__(self):
        if not np.isfinite(self.c):
            raise ModelBuildError('Einstein constant must be finite, got %r' % (self.c,))
        if self.lambda1 is not None and not self.lambda1 > 0:
            raise ModelBuildError('first eigenvalue must be positive, got %r' % (self.lambda1,))

    @property
    def weakly_stable(self):
        """
        ``2 c <= lambda1``, or None when lambda1 is unknown.
        """
        return None if self.lambda1 is None else 2 * self.c <= self.lambda1


def check_einstein(geometry, data):
    """
    ``|Ric - c Id|`` at the point of a local geometry.

    :param geometry: local geometry of the base
    :type geometry: sublab.geometry.LocalGeometry
    :type data: EinsteinData
    :raise EinsteinCheckError: when the residual exceeds :data:`EINSTEIN_TOLERANCE` and data is strict
    :rtype: float
    """
    residual = float(np.linalg.norm(geometry.ricci_endomorphism.value - data.c * np.eye(geometry.dim)))
    if residual > EINSTEIN_TOLERANCE:
        if data.strict:
            raise EinsteinCheckError('base is not Einstein with c=%r at %s' % (data.c, geometry.point.tolist()),
                                     residual=residual)
        logger.warning('Einstein check with c=%r fails at %s (residual %.3g), reporting only',
                       data.c, geometry.point.tolist(), residual)
    return residual


def _system_residuals(jets, section, laplacian, direction, c):
    value = np.asarray(section.value)
    r1 = normalized(jets.h_norm(laplacian.value - c * value), [laplacian.scale, abs(c) * jets.h_norm(value)])
    r2 = jets.pullback_derivative_norm(section, direction)
    return r1, r2


def einstein_residuals(submersion, data, point):
    """
    Residuals of ``lap_H X = c X`` and ``nabla_X X = 0`` for ``X = sum kappa_i eps_i``.

    :type data: EinsteinData
    :rtype: EinsteinResiduals
    """
    jets = submersion_jets(submersion, point)
    return einstein_residuals_at(jets, data)


def einstein_residuals_at(jets, data):
    """
    :func:`einstein_residuals` on existing submersion jets.

    :rtype: EinsteinResiduals
    """
    base = check_einstein(jets.codomain, data)
    laplacian = jets.rough_laplacian(jets.x_field, jets.horizontal_frame)
    r1, r2 = _system_residuals(jets, jets.x_field, laplacian, jets.x_lift, data.c)
    return EinsteinResiduals(r1, r2, base)


def _identity_jets(metric, point):
    return MapJets(SmoothMap.identity(metric), point)


def einstein_field_residuals(metric, data, field, point):
    """
    Residuals of ``lap X = c X`` and ``nabla_X X = 0`` for a vector field on a single manifold.

    A Killing field of an Einstein manifold satisfies the first equation.

    :param metric: metric of the manifold
    :param field: vector field (expressions or field)
    :rtype: EinsteinResiduals
    """
    jets = _identity_jets(metric, point)
    base = check_einstein(jets.domain, data)
    section = as_field(field, metric.chart).evaluate(jets.x)
    laplacian = jets.rough_laplacian(section)
    r1, r2 = _system_residuals(jets, section, laplacian, section, data.c)
    return EinsteinResiduals(r1, r2, base)


def obata_residual(metric, data, function, point):
    """
    Residuals of an eigenfunction f and of its gradient ``X = grad f``.

    * eigres: ``|lap f - 2c f|``, and eigres_lambda1: ``|lap f - lambda1 f|``
    * jres: ``|lap X - 2 Ric(X)|``
    * r1: ``|lap X - c X|``
    * r2: ``|nabla_X X|``

    :param metric: metric of the manifold
    :param function: scalar field f
    :rtype: ObataResiduals
    """
    jets = _identity_jets(metric, point)
    geometry = jets.domain
    base = check_einstein(geometry, data)
    f = as_field(function, metric.chart).evaluate(jets.x)
    gradient = geometry.gradient(f)
    laplacian_f = float(-geometry.divergence(gradient).value)
    value = float(f.value)

    def eigen(eigenvalue):
        return normalized(abs(laplacian_f - eigenvalue * value), [abs(laplacian_f), abs(eigenvalue * value)])

    laplacian = jets.rough_laplacian(gradient)
    ricci = 2 * np.asarray(geometry.ricci_endomorphism.value) @ np.asarray(gradient.value)
    jres = normalized(jets.h_norm(laplacian.value - ricci), [laplacian.scale, jets.h_norm(ricci)])
    r1, r2 = _system_residuals(jets, gradient, laplacian, gradient, data.c)
    eigres_lambda1 = eigen(data.lambda1) if data.lambda1 is not None else None
    return ObataResiduals(eigen(2 * data.c), eigres_lambda1, jres, r1, r2, base)
