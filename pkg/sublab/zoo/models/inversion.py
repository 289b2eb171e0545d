#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
inversion model: ``x -> x / |x|^2`` on an annulus of R^n.
"""
from ..common import flat_chart, require, number
from ...maps import SmoothMap


def inversion(n=4, inner=0.5, outer=2.0):
    """
    Builder for the inversion in the unit sphere, biharmonic exactly when n = 4.

    :param n: dimension
    :param inner: inner radius of the annulus
    :param outer: outer radius of the annulus
    :rtype: SmoothMap
    """
    require(n >= 2, 'dimension must be at least 2, got %r', n)
    require(0 < inner < outer, 'annulus radii must satisfy 0 < inner < outer, got %r and %r', inner, outer)
    coords = ['x%d' % (i + 1) for i in range(n)]
    square = ' + '.join('%s^2' % name for name in coords)
    constraints = ['%s >= %s' % (square, number(inner ** 2)), '%s <= %s' % (square, number(outer ** 2))]
    _, domain = flat_chart(coords, [[-outer, outer]] * n, constraints)
    _, codomain = flat_chart(['y%d' % (i + 1) for i in range(n)], [[-1.0 / inner, 1.0 / inner]] * n)
    return SmoothMap(domain, codomain, ['%s / (%s)' % (name, square) for name in coords])
