#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Round spheres as single manifolds, for curvature, eigenfunction and Killing field checks.
"""
import math

from ..common import require, number
from .hopf import sphere_chart, berger_metric
from ...geometry import Chart, MetricField
from ...maps import SmoothMap
from ...submersion import EinsteinData

#: first eigenfunction and rotation field of a round sphere in the polar chart
SPHERE_EXTRAS = {'eigenfunction': 'cos(theta)', 'killing': ['0', '1']}


def round_sphere(radius, clearance=0.05):
    """
    ``radius^2 (dtheta^2 + sin(theta)^2 dphi^2)`` in the polar chart.

    :rtype: MetricField
    """
    chart = Chart(['theta', 'phi'], [[clearance, math.pi - clearance], [-math.pi, math.pi]])
    square = number(radius ** 2)
    return MetricField.diagonal([square, '%s * sin(theta)^2' % square], chart)


def _sphere(radius):
    require(radius > 0, 'radius must be positive, got %r', radius)
    metric = round_sphere(radius)
    einstein = EinsteinData(c=1.0 / radius ** 2, lambda1=2.0 / radius ** 2)
    return SmoothMap.identity(metric, einstein=einstein, extras=SPHERE_EXTRAS)


def cp1_round():
    """
    Builder for CP^1 as the round sphere of radius sqrt(2): ``Ric = Id / 2``, first eigenvalue 1.

    :rtype: SmoothMap
    """
    return _sphere(math.sqrt(2.0))


def s2_round(r=1.0):
    """
    Builder for the round sphere of radius r: ``Ric = Id / r^2``, first eigenvalue ``2 / r^2``.

    :rtype: SmoothMap
    """
    return _sphere(r)


def su2_round():
    """
    Builder for SU(2) as the unit three sphere: ``Ric = 2 Id``, first eigenvalue 3.

    :rtype: SmoothMap
    """
    extras = {'eigenfunction': 'cos(eta) * cos(xi1)', 'killing': ['0', '1', '0']}
    return SmoothMap.identity(berger_metric(sphere_chart(), 1.0), einstein=EinsteinData(c=2.0, lambda1=3.0),
                              extras=extras)
