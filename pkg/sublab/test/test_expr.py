#!/usr/bin/env python
# -*- coding: utf-8 -*-
# pylint: disable=no-self-use, pointless-statement, missing-docstring, invalid-name
import os

import pytest
import yaml

from ..expr import (parse_expr, parse_constraint, evaluate, eval_expr_jet, to_string, fd_check, relative_error,
                    DEFAULT_STEPS, tokenize, Number, Variable, BinaryOp, Call)
from ..jets import lift_point
from ..exceptions import ParseError, SingularPointError, JetOrderError

__location__ = os.path.realpath(os.path.join(os.getcwd(), os.path.dirname(__file__)))

with open(os.path.join(__location__, 'expressions.yml'), 'r', encoding='utf-8') as infile:
    EXPRESSIONS = yaml.safe_load(infile)


@pytest.mark.parametrize('text', list(EXPRESSIONS), ids=list(EXPRESSIONS))
def test_expressions(text):
    expected = EXPRESSIONS[text]
    consts = expected.get('consts')
    tree = parse_expr(text, expected['coords'], consts)
    assert evaluate(tree, expected['point'], consts) == pytest.approx(expected['value'], rel=1e-12, abs=1e-12)
    jet = eval_expr_jet(tree, lift_point(expected['point'], order=2), consts)
    assert float(jet.value) == pytest.approx(expected['value'], rel=1e-12, abs=1e-12)
    assert jet.gradient().value.tolist() == pytest.approx(expected['gradient'], rel=1e-12, abs=1e-12)


@pytest.mark.parametrize('text', list(EXPRESSIONS), ids=list(EXPRESSIONS))
def test_printer_fixed_point(text):
    expected = EXPRESSIONS[text]
    tree = parse_expr(text, expected['coords'], expected.get('consts'))
    printed = to_string(tree)
    assert to_string(parse_expr(printed, expected['coords'], expected.get('consts'))) == printed


@pytest.mark.parametrize('text', ['x +', 'foo(x)', 'sin(x, x)', 'sin()', 'x $ 2', 'y * x', '(x', 'x)', 'sin'])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_expr(text, ['x'])


def test_parse_error_caret():
    with pytest.raises(ParseError) as excinfo:
        parse_expr('x $ 2', ['x'])
    assert excinfo.value.span == (2, 3)
    assert str(excinfo.value).splitlines()[-1] == '    ^'


def test_tokenize():
    assert [token.text for token in tokenize('x1*2.5e3')] == ['x1', '*', '2.5e3', '']


def test_constant_folding():
    tree = parse_expr('2 * 3 + x', ['x'])
    assert to_string(tree) == '6 + x'


def test_singular_point():
    tree = parse_expr('log(x - 2)', ['x'])
    with pytest.raises(SingularPointError) as excinfo:
        evaluate(tree, [1.0])
    assert excinfo.value.span == (0, 10)
    assert excinfo.value.point == [1.0]


def test_division_by_zero():
    tree = parse_expr('x / y', ['x', 'y'])
    with pytest.raises(SingularPointError):
        evaluate(tree, [1.0, 0.0])


def test_constraint():
    tree = parse_constraint('x^2 + y^2 >= 0.25', ['x', 'y'])
    assert not evaluate(tree, [0.1, 0.1])
    assert evaluate(tree, [1.0, 0.0])


@pytest.mark.parametrize('text, coords, point', [
    ('exp(x^2/2)', ['x'], [1.0]),
    ('sin(x) * y^2 + log(1 + y^2)', ['x', 'y'], [0.3, 0.8]),
    ('x / (x^2 + y^2)', ['x', 'y'], [1.2, -0.7]),
])
def test_fd_check(text, coords, point):
    tree = parse_expr(text, coords)
    jet = eval_expr_jet(tree, lift_point(point, order=3))
    for alpha in [(1,), (2,), (3,)] if len(coords) == 1 else [(1, 0), (0, 1), (1, 1), (2, 1), (0, 3)]:
        assert relative_error(fd_check(tree, point, alpha), jet.derivative(alpha)) < 1e-6


def test_fd_check_order():
    tree = parse_expr('x^5', ['x'])
    with pytest.raises(JetOrderError):
        fd_check(tree, [1.0], (4,))


def test_fd_check_exp_product():
    tree = parse_expr('exp(x * y)', ['x', 'y'])
    jet = eval_expr_jet(tree, lift_point([1.0, 1.0], order=3))
    for alpha in [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)]:
        assert relative_error(fd_check(tree, [1.0, 1.0], alpha), jet.derivative(alpha)) < 1e-6
    assert DEFAULT_STEPS[1] == 1e-5


def test_node_spans():
    tree = parse_expr('sin(x) + 2', ['x'])
    assert isinstance(tree, BinaryOp)
    assert tree.span == (0, 10)
    assert tree.left.span == (0, 6)
    assert tree.right.span == (9, 10)
    assert tree == BinaryOp('+', Call('sin', Variable('x', 0)), Number(2.0))
    assert Number(2.0, (4, 5)) == Number(2.0)
    assert Number(2.0, (4, 5)).span == (4, 5)
    assert Variable('x', 0).span == (0, 0)
