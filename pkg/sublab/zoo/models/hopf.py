#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Hopf fibration of the three sphere over the round two sphere of radius 1/2, and its Berger deformations.

The total space uses the chart ``(cos(eta) e^(i xi1), sin(eta) e^(i xi2))`` of S^3, whose fibres are the orbits of
``d_xi1 + d_xi2``. The Berger metric rescales the fibre direction by eps.
"""
import math

from ..common import require, number
from ...geometry import Chart, MetricField
from ...submersion import RiemannianSubmersion, EinsteinData

#: clearance kept from the coordinate singularities of the charts
CLEARANCE = 0.01

#: round S^2(1/2): Ric = 4, first eigenvalue 8
BASE_EINSTEIN = EinsteinData(c=4.0, lambda1=8.0)

#: first eigenfunction and rotation field of the base
BASE_EXTRAS = {'eigenfunction': 'cos(theta)', 'killing': ['0', '1']}


def sphere_chart():
    """
    Euler angle chart of S^3, away from ``eta = 0`` and ``eta = pi/2``.

    :rtype: Chart
    """
    return Chart(['eta', 'xi1', 'xi2'], [[CLEARANCE, math.pi / 2 - CLEARANCE], [-3.0, 3.0], [-3.0, 3.0]])


def berger_metric(chart, eps):
    """
    ``g_round + (eps^2 - 1) theta^2`` with the fibre one-form ``theta = cos(eta)^2 dxi1 + sin(eta)^2 dxi2``.

    :rtype: MetricField
    """
    stretch = number(eps ** 2 - 1)
    g11 = 'cos(eta)^2 + %s * cos(eta)^4' % stretch
    g22 = 'sin(eta)^2 + %s * sin(eta)^4' % stretch
    g12 = '%s * cos(eta)^2 * sin(eta)^2' % stretch
    return MetricField([['1', '0', '0'], ['0', g11, g12], ['0', g12, g22]], chart)


def hopf_projection(eps):
    """
    Hopf map ``(eta, xi1, xi2) -> (theta, phi) = (2 eta, xi2 - xi1)`` from the Berger sphere.

    :rtype: RiemannianSubmersion
    """
    total = berger_metric(sphere_chart(), eps)
    base_chart = Chart(['theta', 'phi'], [[2 * CLEARANCE, math.pi - 2 * CLEARANCE], [-6.0, 6.0]])
    base = MetricField.diagonal(['1/4', 'sin(theta)^2/4'], base_chart)
    return RiemannianSubmersion(total, base, ['2*eta', 'xi2 - xi1'], einstein=BASE_EINSTEIN,
                                extras=BASE_EXTRAS)


def hopf():
    """
    Builder for the standard Hopf fibration, harmonic.

    :rtype: RiemannianSubmersion
    """
    return hopf_projection(1.0)


def berger(eps=1.0):
    """
    Builder for the Hopf projection of the Berger sphere with fibre length scaled by eps; fibres stay geodesic, so the
    projection is harmonic for every eps.

    :param eps: fibre scale, positive
    :rtype: RiemannianSubmersion
    """
    require(eps > 0, 'eps must be positive, got %r', eps)
    return hopf_projection(eps)
