#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Evaluation and printing of expression trees.

The same evaluator works on plain floats and on jets: the point is either a sequence of coordinates or a vector jet
from :func:`sublab.jets.lift_point`.

>>> from .parser import parse_expr
>>> from ..jets import lift_point
>>> f = evaluate(parse_expr('x^2', ['x']), lift_point([2.5]))
>>> float(f.value), f.derivative((1,)), f.derivative((2,)), f.derivative((3,))
(6.25, 5.0, 2.0, 0.0)
"""
from functools import singledispatch

import numpy as np

from .nodes import Number, Variable, Constant, UnaryOp, BinaryOp, Call, Comparison
from .parser import BUILTIN_CONSTANTS
from ..jets import Jet, power, FUNCTIONS
from ..exceptions import SingularPointError, SublabError


class _Environment(object):
    """
    Evaluation inputs: coordinate values and constants.
    """

    def __init__(self, point, consts):
        if isinstance(point, Jet):
            self.values = [point[i] for i in range(point.shape[0])] if point.shape else [point]
            self.plain = np.atleast_1d(point.value).tolist()
        else:
            self.values = [v if isinstance(v, Jet) else float(v) for v in point]
            self.plain = [float(v.value) if isinstance(v, Jet) else v for v in self.values]
        self.consts = dict(BUILTIN_CONSTANTS)
        if consts:
            self.consts.update(consts)


def _checked(value, node, env):
    coeffs = value.coeffs if isinstance(value, Jet) else value
    if not np.all(np.isfinite(coeffs)):
        raise SingularPointError('non-finite value', point=env.plain, span=node.span)
    return value


@singledispatch
def _evaluate(node, env):
    raise TypeError('cannot evaluate %r' % (node,))


@_evaluate.register(Number)
def _(node, env):  # pylint:disable=unused-argument
    return node.value


@_evaluate.register(Variable)
def _(node, env):
    try:
        return env.values[node.index]
    except IndexError:
        raise SingularPointError('point has no coordinate %r (index %d)' % (node.name, node.index),
                                 point=env.plain, span=node.span)


@_evaluate.register(Constant)
def _(node, env):
    try:
        return float(env.consts[node.name])
    except KeyError:
        raise SublabError('unbound constant %r' % node.name)


@_evaluate.register(UnaryOp)
def _(node, env):
    operand = _evaluate(node.operand, env)
    return -operand if node.op == '-' else operand


def _apply_binary(op, left, right):
    if op == '+':
        return left + right
    if op == '-':
        return left - right
    if op == '*':
        return left * right
    if op == '/':
        if not isinstance(right, Jet) and right == 0:
            raise ZeroDivisionError('division by zero')
        return left / right
    return power(left, right)


@_evaluate.register(BinaryOp)
def _(node, env):
    left = _evaluate(node.left, env)
    right = _evaluate(node.right, env)
    try:
        return _checked(_apply_binary(node.op, left, right), node, env)
    except SingularPointError as exc:
        raise exc.located(point=env.plain, span=node.span)
    except (ArithmeticError, ValueError) as exc:
        raise SingularPointError(str(exc) or type(exc).__name__, point=env.plain, span=node.span)


@_evaluate.register(Call)
def _(node, env):
    argument = _evaluate(node.argument, env)
    try:
        return _checked(FUNCTIONS[node.function](argument), node, env)
    except SingularPointError as exc:
        raise exc.located(point=env.plain, span=node.span)
    except (ArithmeticError, ValueError) as exc:
        raise SingularPointError(str(exc) or type(exc).__name__, point=env.plain, span=node.span)


@_evaluate.register(Comparison)
def _(node, env):
    left = _evaluate(node.left, env)
    right = _evaluate(node.right, env)
    left = float(left.value) if isinstance(left, Jet) else left
    right = float(right.value) if isinstance(right, Jet) else right
    return {'<': left < right, '<=': left <= right, '>': left > right, '>=': left >= right}[node.op]


def evaluate(expr, point, consts=None):
    """
    Evaluate an expression at a point.

    :param expr: syntax tree from :func:`sublab.expr.parse_expr`
    :param point: coordinates (floats), a vector jet, or a sequence of scalar jets
    :param consts: constant values by name
    :type consts: dict
    :return: a float for plain points, a jet otherwise (a float when the expression has no variable)
    :raises SingularPointError: carrying the point and the span of the failing node
    """
    return _evaluate(expr, _Environment(point, consts))


def eval_expr_jet(expr, point, consts=None):
    """
    Evaluate an expression on a jet point, always returning a jet.

    :param point: vector jet
    :type point: Jet
    :rtype: Jet
    """
    ret = evaluate(expr, point, consts)
    if not isinstance(ret, Jet):
        ret = Jet.constant(ret, point.basis)
    return ret


_PRECEDENCE = {'+': 1, '-': 1, '*': 2, '/': 2, 'unary': 3, '^': 4, 'atom': 5}


def _format_number(value):
    text = repr(float(value))
    if text.endswith('.0'):
        text = text[:-2]
    if value < 0:
        return '(' + text + ')'
    return text


def _precedence(node):
    if isinstance(node, BinaryOp):
        return _PRECEDENCE[node.op]
    if isinstance(node, UnaryOp):
        return _PRECEDENCE['unary']
    return _PRECEDENCE['atom']


def _wrap(node, minimum):
    text = to_string(node)
    if _precedence(node) < minimum:
        return '(' + text + ')'
    return text


def to_string(node):
    """
    Print an expression with the minimal parentheses that keep its tree when parsed again.

    >>> from .parser import parse_expr
    >>> to_string(parse_expr('-(x)^(2) + (y * (z / 2)) - -1.5', ['x', 'y', 'z']))
    '-x^2 + y * (z / 2) - (-1.5)'
    """
    if isinstance(node, Number):
        return _format_number(node.value)
    if isinstance(node, (Variable, Constant)):
        return node.name
    if isinstance(node, UnaryOp):
        return node.op + _wrap(node.operand, _PRECEDENCE['unary'])
    if isinstance(node, Call):
        return '%s(%s)' % (node.function, to_string(node.argument))
    if isinstance(node, Comparison):
        return '%s %s %s' % (to_string(node.left), node.op, to_string(node.right))
    level = _PRECEDENCE[node.op]
    if node.op == '^':
        return '%s^%s' % (_wrap(node.left, _PRECEDENCE['atom']), _wrap(node.right, _PRECEDENCE['unary']))
    return '%s %s %s' % (_wrap(node.left, level), node.op, _wrap(node.right, level + 1))
