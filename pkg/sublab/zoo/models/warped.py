#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Warped projections ``(R^2 x R, dx^2 + dy^2 + beta(x)^2 dt^2) -> (R^2, dx^2 + dy^2)``, and the warped projection of
``S^2 x R`` onto the unit sphere.
"""
import logging
import math

import numpy as np

from ..common import flat_chart, require
from .spheres import round_sphere, SPHERE_EXTRAS
from ...expr import parse_expr, eval_expr_jet, evaluate, to_string
from ...geometry import Chart, MetricField
from ...jets import lift_point
from ...submersion import RiemannianSubmersion, EinsteinData
from ...exceptions import SublabError, ModelBuildError

logger = logging.getLogger(__name__)

#: largest accepted ``|beta'/beta - f|`` of the closed form warping function
WARPING_TOLERANCE = 1e-9

#: warping function with ``beta'/beta = -c1 (1 + exp(c1 x)) / (1 - exp(c1 x))``
LOUBEAU_OU_BETA = 'c2 * exp(-c1 * x) * (1 - exp(c1 * x))^2'
LOUBEAU_OU_F = '-c1 * (1 + exp(c1 * x)) / (1 - exp(c1 * x))'


def _grid(x_min, x_max):
    return np.linspace(x_min, x_max, 21)


def _check_warping(beta, variable, low, high, consts=None):
    try:
        tree = parse_expr(beta, [variable], consts)
    except SublabError as exc:
        raise ModelBuildError('invalid warping function %r: %s' % (beta, exc))
    for value in _grid(low, high):
        try:
            warping = evaluate(tree, [value], consts)
        except SublabError as exc:
            raise ModelBuildError('warping function %s cannot be evaluated at %s=%r: %s'
                                  % (to_string(tree), variable, value, exc))
        require(warping != 0, 'warping function %s vanishes at %s=%r', to_string(tree), variable, value)


def warped_submersion(beta, x_min, x_max, size=1.0, consts=None):
    """
    Projection of a warped metric onto the flat plane.

    :param beta: warping function of x, as expression text
    :param consts: constants used by beta
    :rtype: RiemannianSubmersion
    """
    require(x_min < x_max, 'empty x range [%r, %r]', x_min, x_max)
    coords = ['x', 'y', 't']
    total_chart = Chart(coords, [[x_min, x_max], [-size, size], [-size, size]], consts=consts)
    _check_warping(beta, 'x', x_min, x_max, consts)
    total = MetricField.diagonal(['1', '1', '(%s)^2' % beta], total_chart, consts)
    _, base = flat_chart(['x', 'y'], [[x_min, x_max], [-size, size]])
    return RiemannianSubmersion(total, base, ['x', 'y'], consts=consts)


def check_log_derivative(beta, f, x_min, x_max, consts):
    """
    Largest ``|beta'/beta - f|`` on a grid of x values, with jets of beta.

    :rtype: float
    """
    beta = parse_expr(beta, ['x'], consts)
    f = parse_expr(f, ['x'], consts)
    worst = 0.0
    for x in _grid(x_min, x_max):
        jet = eval_expr_jet(beta, lift_point([x], order=1), consts)
        ratio = jet.derivative((1,)) / float(jet.value)
        expected = evaluate(f, [x], consts)
        worst = max(worst, abs(ratio - expected) / max(1.0, abs(expected)))
    return worst


def loubeau_ou(c1=1.0, c2=1.0, x_min=0.1, x_max=2.0, size=1.0):
    """
    Builder for the proper biharmonic warped projection with
    ``beta = c2 exp(-c1 x) (1 - exp(c1 x))^2``.

    :param c1: rate, non zero
    :param c2: scale, non zero
    :param x_min: lower x bound, the x range must not contain 0
    :param x_max: upper x bound
    :param size: half width of the y and t ranges
    :rtype: RiemannianSubmersion
    """
    require(c1 != 0, 'c1 must be non zero')
    require(c2 != 0, 'c2 must be non zero')
    require(x_min < x_max, 'empty x range [%r, %r]', x_min, x_max)
    require(not x_min <= 0 <= x_max, 'x range [%r, %r] contains the singular line x = 0', x_min, x_max)
    consts = {'c1': float(c1), 'c2': float(c2)}
    worst = check_log_derivative(LOUBEAU_OU_BETA, LOUBEAU_OU_F, x_min, x_max, consts)
    require(worst <= WARPING_TOLERANCE, "closed form warping function fails beta'/beta = f by %.3g", worst)
    logger.debug('loubeau_ou warping function verified, worst deviation %.3g', worst)
    return warped_submersion(LOUBEAU_OU_BETA, x_min, x_max, size, consts)


def warped_custom(beta='exp(x^2/2)', x_min=0.1, x_max=2.0, size=1.0):
    """
    Builder for the warped projection with a user supplied warping function of x.

    :param beta: non vanishing expression of x
    :rtype: RiemannianSubmersion
    """
    return warped_submersion(str(beta), float(x_min), float(x_max), size)



def warped_sphere(beta='1 + cos(theta)/2', clearance=0.3, size=1.0):
    """
    Builder for ``(S^2 x R, dtheta^2 + sin(theta)^2 dphi^2 + beta(theta)^2 dt^2)`` projected onto the unit sphere.

    The base is curved (``Ric = Id``) and the tension ``-X`` with ``X = -(beta'/beta) d_theta`` does not vanish for a
    non constant beta.

    :param beta: non vanishing expression of theta
    :param clearance: distance kept from the poles
    :param size: half width of the t range
    :rtype: RiemannianSubmersion
    """
    require(0 < clearance < math.pi / 2, 'clearance must lie in (0, pi/2), got %r', clearance)
    beta = str(beta)
    low, high = clearance, math.pi - clearance
    _check_warping(beta, 'theta', low, high)
    total_chart = Chart(['theta', 'phi', 't'], [[low, high], [-math.pi, math.pi], [-size, size]])
    total = MetricField.diagonal(['1', 'sin(theta)^2', '(%s)^2' % beta], total_chart)
    return RiemannianSubmersion(total, round_sphere(1.0, clearance), ['theta', 'phi'],
                                einstein=EinsteinData(c=1.0, lambda1=2.0), extras=SPHERE_EXTRAS)
