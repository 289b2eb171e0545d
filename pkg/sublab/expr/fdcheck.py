#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Finite difference oracle for partial derivatives of expressions.

Tensor products of central stencils, with one level of Richardson extrapolation ``(4 D(h/2) - D(h)) / 3``.

>>> from .parser import parse_expr
>>> abs(fd_check(parse_expr('x^2', ['x']), [1.0], (1,)) - 2.0) < 1e-9
True
"""
import itertools
import logging

import numpy as np

from .evaluator import evaluate
from ..exceptions import JetOrderError, SingularPointError

logger = logging.getLogger(__name__)

#: central stencils per derivative order, as (offset, weight) pairs for unit step
STENCILS = {
    0: ((0, 1.0),),
    1: ((-1, -0.5), (1, 0.5)),
    2: ((-1, 1.0), (0, -2.0), (1, 1.0)),
    3: ((-2, -0.5), (-1, 1.0), (1, -1.0), (2, 0.5)),
}

#: default step per total derivative order
DEFAULT_STEPS = {0: 1.0, 1: 1e-5, 2: 5e-3, 3: 1e-2}

#: highest total order the oracle handles
MAX_FD_ORDER = 3


def _central(expr, point, alpha, step, consts):
    stencils = [STENCILS[a] for a in alpha]
    total = 0.0
    for nodes in itertools.product(*stencils):
        shifted = point + step * np.array([offset for offset, _ in nodes], dtype=float)
        weight = np.prod([w for _, w in nodes])
        try:
            value = evaluate(expr, shifted.tolist(), consts)
        except SingularPointError as exc:
            raise SingularPointError('stencil node too close to a singularity (%s)' % exc.message,
                                     point=shifted.tolist(), span=exc.span)
        total += weight * value
    return total / step ** sum(alpha)


def fd_check(expr, point, alpha, step=None, consts=None):
    """
    Central difference estimate of a partial derivative.

    :param expr: expression tree
    :param point: coordinates
    :param alpha: exponents per coordinate, total at most 3
    :type alpha: tuple
    :param step: base step, defaults to :data:`DEFAULT_STEPS` of the total order
    :param consts: constant values
    :return: derivative estimate
    :rtype: float
    :raises SingularPointError: when a stencil node cannot be evaluated
    """
    point = np.array(point, dtype=float).reshape(-1)
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != point.size:
        raise ValueError('multi-index %s does not match a %d-dimensional point' % (alpha, point.size))
    order = sum(alpha)
    if order > MAX_FD_ORDER or any(a < 0 for a in alpha):
        raise JetOrderError('finite differences are limited to total order %d, got %s' % (MAX_FD_ORDER, alpha))
    if order == 0:
        return float(evaluate(expr, point.tolist(), consts))
    step = DEFAULT_STEPS[order] if step is None else float(step)
    coarse = _central(expr, point, alpha, step, consts)
    fine = _central(expr, point, alpha, step / 2.0, consts)
    ret = (4.0 * fine - coarse) / 3.0
    logger.debug('fd %s at %s: coarse=%r fine=%r extrapolated=%r', alpha, point.tolist(), coarse, fine, ret)
    return ret


def relative_error(estimate, reference):
    """
    ``|estimate - reference| / max(1, |reference|)``.

    >>> relative_error(101.0, 100.0)
    0.01
    """
    return abs(estimate - reference) / max(1.0, abs(reference))
