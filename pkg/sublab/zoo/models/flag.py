#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
flag_local model: a local circle bundle whose horizontal structure functions are linear in the fibre coordinate.
"""
import numpy as np

from ..common import require, number, matrix_metric
from ...geometry import Chart, MetricField
from ...submersion import RiemannianSubmersion, EinsteinData

#: Einstein data of the Fubini-Study base the model stands for; the chart metric is not that metric
FLAG_EINSTEIN = EinsteinData(c=0.5, lambda1=1.0, strict=False)

BOX = [-0.5, 0.5]


def flag_local(l=2, a=1.0, b=0.0, c=0.0, d=1.0, A=1.0, B=1.0, C=1.0):  # pylint:disable=invalid-name
    """
    Builder for the chart ``(s, t, u)`` with orthonormal frame ``e1 = a d_s + b d_t``, ``e2 = c d_s + d d_t`` and
    ``e3 = exp(K u (A s + B t)) d_u`` where ``K = C l (l - 1)``, projected onto ``(s, t)``.

    Then ``kappa_1 = K u (a A + b B)`` and ``kappa_2 = K u (c A + d B)``.

    :rtype: RiemannianSubmersion
    """
    require(l >= 0, 'l must be non negative, got %r', l)
    frame = np.array([[a, c], [b, d]], dtype=float)
    require(abs(np.linalg.det(frame)) > 1e-12, 'e1 and e2 are dependent: ad - bc = 0')
    horizontal = np.linalg.inv(frame @ frame.T)
    horizontal = 0.5 * (horizontal + horizontal.T)
    consts = {'K': float(C * l * (l - 1)), 'A': float(A), 'B': float(B)}
    chart = Chart(['s', 't', 'u'], [BOX] * 3, consts=consts)
    block = [[number(entry) for entry in row] for row in horizontal]
    vertical = 'exp(-2 * K * u * (A * s + B * t))'
    total = MetricField([block[0] + ['0'], block[1] + ['0'], ['0', '0', vertical]], chart)
    base = matrix_metric(horizontal, Chart(['s', 't'], [BOX] * 2))
    return RiemannianSubmersion(total, base, ['s', 't'], einstein=FLAG_EINSTEIN)
