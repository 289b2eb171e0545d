#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Helpers shared by model builders.
"""
import numpy as np

from ..geometry import Chart, MetricField
from ..exceptions import ModelBuildError


def require(condition, message, *args):
    """
    Raise :class:`ModelBuildError` with the formatted message unless condition holds.

    >>> require(1 < 2, 'never raised')
    >>> require(0 > 1, 'bad value %s', 0)
    Traceback (most recent call last):
    ...
    sublab.exceptions.ModelBuildError: bad value 0
    """
    if not condition:
        raise ModelBuildError(message % args if args else message)


def number(value):
    """
    Expression text of a float, exact on reload.

    >>> number(0.25)
    '0.25'
    >>> number(-2)
    '(-2.0)'
    """
    text = repr(float(value))
    return '(%s)' % text if text.startswith('-') else text


def flat_chart(coords, bounds, constraints=(), consts=None):
    """
    Chart with its euclidean metric.

    :rtype: (Chart, MetricField)
    """
    chart = Chart(coords, bounds, constraints, consts)
    return chart, MetricField.euclidean(chart)


def matrix_metric(matrix, chart):
    """
    Constant metric from a plain symmetric matrix.

    :rtype: MetricField
    """
    matrix = np.asarray(matrix, dtype=float)
    matrix = 0.5 * (matrix + matrix.T)
    return MetricField([[number(entry) for entry in row] for row in matrix], chart)
