#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
product model: projection of the flat product R^2 x R onto R^2.
"""
from ..common import flat_chart, require
from ...submersion import RiemannianSubmersion


def product(size=1.0):
    """
    Builder for ``(x, y, t) -> (x, y)`` between flat spaces.

    :param size: half width of the domain box
    :rtype: RiemannianSubmersion
    """
    require(size > 0, 'size must be positive, got %r', size)
    _, total = flat_chart(['x', 'y', 't'], [[-size, size]] * 3)
    _, base = flat_chart(['x', 'y'], [[-size, size]] * 2)
    return RiemannianSubmersion(total, base, ['x', 'y'])
