#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Elementary functions over jets and plain numbers.

Jets go through a truncated univariate Taylor composition ``f(v + d) = sum_k f^(k)(v)/k! d^k`` where d is the jet
minus its value. Plain numbers use :mod:`math`, arrays use :mod:`numpy`. Domain violations raise
:class:`sublab.exceptions.SingularPointError`.

>>> x = lift_point([0.0], order=4)[0]
>>> [round(sin(x).derivative((k,)), 12) + 0.0 for k in range(4)]
[0.0, 1.0, 0.0, -1.0]
>>> sqrt(4.0)
2.0
"""
import math
from math import factorial

import numpy as np

from .jet import Jet, lift_point  # pylint:disable=unused-import
from ..exceptions import SingularPointError


def _is_integral(exponent):
    try:
        return float(exponent).is_integer()
    except (TypeError, ValueError):
        return False


def _taylor_compose(jet, coefficients):
    """
    Evaluate sum_k coefficients[k] * (jet - value)^k up to the jet order with Horner's scheme.

    :param jet: argument
    :type jet: Jet
    :param coefficients: list of arrays shaped like the jet value, one per degree 0..order
    :return:
    :rtype: Jet
    """
    delta = jet - jet.value
    ret = Jet.constant(coefficients[jet.order], jet.basis)
    for degree in range(jet.order - 1, -1, -1):
        ret = ret * delta + coefficients[degree]
    return ret


def _check(condition, message):
    if not np.all(condition):
        raise SingularPointError(message)


def _plain(value):
    if isinstance(value, np.ndarray) and value.ndim > 0:
        return value
    return float(value)


def exp(x):
    """
    Exponential.
    """
    if isinstance(x, Jet):
        value = np.exp(x.value)
        _check(np.isfinite(value), 'exp overflow')
        return _taylor_compose(x, [value / factorial(k) for k in range(x.order + 1)])
    x = _plain(x)
    if isinstance(x, np.ndarray):
        ret = np.exp(x)
        _check(np.isfinite(ret), 'exp overflow')
        return ret
    try:
        return math.exp(x)
    except OverflowError:
        raise SingularPointError('exp overflow')


def log(x):
    """
    Natural logarithm, defined for positive values.
    """
    if isinstance(x, Jet):
        value = x.value
        _check(value > 0, 'log of a non positive value')
        coefficients = [np.log(value)]
        for k in range(1, x.order + 1):
            coefficients.append((-1.0) ** (k + 1) / (k * value ** k))
        return _taylor_compose(x, coefficients)
    x = _plain(x)
    _check(np.asarray(x) > 0, 'log of a non positive value')
    return np.log(x) if isinstance(x, np.ndarray) else math.log(x)


def _quarter_turns(value, slope):
    return [value, slope, -value, -slope]


def sin(x):
    """
    Sine.
    """
    if isinstance(x, Jet):
        cycle = _quarter_turns(np.sin(x.value), np.cos(x.value))
        return _taylor_compose(x, [cycle[k % 4] / factorial(k) for k in range(x.order + 1)])
    x = _plain(x)
    return np.sin(x) if isinstance(x, np.ndarray) else math.sin(x)


def cos(x):
    """
    Cosine.
    """
    if isinstance(x, Jet):
        cycle = _quarter_turns(np.cos(x.value), -np.sin(x.value))
        return _taylor_compose(x, [cycle[k % 4] / factorial(k) for k in range(x.order + 1)])
    x = _plain(x)
    return np.cos(x) if isinstance(x, np.ndarray) else math.cos(x)


def _real_power_coefficients(value, exponent, order):
    coefficients = []
    binomial = 1.0
    for k in range(order + 1):
        coefficients.append(binomial * value ** (exponent - k))
        binomial *= (exponent - k) / (k + 1)
    return coefficients


def reciprocal(x):
    """
    Multiplicative inverse, defined for non zero values.
    """
    if isinstance(x, Jet):
        value = x.value
        _check(value != 0, 'division by zero')
        return _taylor_compose(x, [(-1.0) ** k / value ** (k + 1) for k in range(x.order + 1)])
    x = _plain(x)
    _check(np.asarray(x) != 0, 'division by zero')
    return 1.0 / x


def _integer_power(x, exponent):
    if exponent < 0:
        return reciprocal(_integer_power(x, -exponent))
    ret = None
    square = x
    while exponent:
        if exponent & 1:
            ret = square if ret is None else ret * square
        exponent >>= 1
        if exponent:
            square = square * square
    if ret is None:
        return Jet.constant(np.ones(x.shape), x.basis)
    return ret


def power(base, exponent):
    """
    ``base ** exponent``.

    Integral exponents are computed by repeated multiplication and accept any base (non zero for negative
    exponents). Other real exponents need a positive base. A jet exponent goes through ``exp(exponent * log(base))``.

    >>> power(-2.0, 3)
    -8.0
    >>> x = lift_point([2.0], order=2)[0]
    >>> abs(power(x, 0.5).derivative((1,)) - 0.5 / math.sqrt(2.0)) < 1e-15
    True
    """
    if isinstance(exponent, Jet):
        if isinstance(base, Jet):
            return exp(exponent * log(base))
        base = _plain(base)
        _check(np.asarray(base) > 0, 'power with a jet exponent needs a positive base')
        return exp(exponent * math.log(base) if not isinstance(base, np.ndarray) else exponent * np.log(base))
    exponent = float(exponent)
    if isinstance(base, Jet):
        if _is_integral(exponent):
            return _integer_power(base, int(exponent))
        value = base.value
        _check(value > 0, 'non integral power of a non positive value')
        return _taylor_compose(base, _real_power_coefficients(value, exponent, base.order))
    base = _plain(base)
    if _is_integral(exponent):
        if exponent < 0:
            _check(np.asarray(base) != 0, 'division by zero')
        if isinstance(base, np.ndarray):
            ret = np.power(base, exponent)
        else:
            try:
                ret = base ** int(exponent)
            except OverflowError:
                raise SingularPointError('power overflow')
        _check(np.isfinite(ret), 'power overflow')
        return ret
    _check(np.asarray(base) > 0 if exponent < 0 else np.asarray(base) >= 0,
           'non integral power of a negative value')
    try:
        ret = np.power(base, exponent) if isinstance(base, np.ndarray) else math.pow(base, exponent)
    except OverflowError:
        raise SingularPointError('power overflow')
    _check(np.isfinite(ret), 'power overflow')
    return ret


def sqrt(x):
    """
    Square root. Jets need a positive value, plain numbers a non negative one.
    """
    if isinstance(x, Jet):
        value = x.value
        _check(value > 0, 'sqrt of a non positive value')
        return _taylor_compose(x, _real_power_coefficients(value, 0.5, x.order))
    x = _plain(x)
    _check(np.asarray(x) >= 0, 'sqrt of a negative value')
    return np.sqrt(x) if isinstance(x, np.ndarray) else math.sqrt(x)


def fabs(x):
    """
    Absolute value. Jets must not vanish at the expansion point.
    """
    if isinstance(x, Jet):
        value = x.value
        _check(value != 0, 'abs is not differentiable at zero')
        return x * np.sign(value)
    x = _plain(x)
    return np.abs(x) if isinstance(x, np.ndarray) else math.fabs(x)


#: functions callable from the expression language, by name.
FUNCTIONS = {
    'exp': exp,
    'log': log,
    'sin': sin,
    'cos': cos,
    'sqrt': sqrt,
    'abs': fabs,
}
