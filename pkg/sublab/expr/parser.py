#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Recursive descent parser of the expression language.

Grammar, loosest binding first::

    comparison := sum ('<' | '<=' | '>' | '>=') sum
    sum        := product (('+' | '-') product)*
    product    := unary (('*' | '/') unary)*
    unary      := ('-' | '+') unary | power
    power      := atom (('^' | '**') unary)?
    atom       := number | name | name '(' sum ')' | '(' sum ')'

Power is right associative and binds tighter than unary minus, so ``-x^2`` is ``-(x^2)`` and ``2^-1`` is valid.

>>> expr = parse_expr('x^2 + y^2', ['x', 'y'])
>>> from .evaluator import evaluate
>>> evaluate(expr, [3.0, 4.0])
25.0
"""
import math

from .lexer import tokenize, NUMBER, NAME, OPERATOR, COMPARISON, END
from .nodes import Number, Variable, Constant, UnaryOp, BinaryOp, Call, Comparison
from ..jets.functions import FUNCTIONS
from ..exceptions import ParseError, SublabError

#: constants every expression may use without declaring them
BUILTIN_CONSTANTS = {'pi': math.pi}


class _Parser(object):
    """
    One-shot parser over a token list.
    """

    def __init__(self, text, coords, consts):
        self.text = text
        self.tokens = tokenize(text)
        self.position = 0
        self.coords = dict((name, i) for i, name in enumerate(coords))
        if len(self.coords) != len(coords):
            raise ParseError((0, 0), 'duplicated coordinate names in %s' % list(coords), text)
        self.consts = set(consts or ()) | set(BUILTIN_CONSTANTS)

    @property
    def current(self):  # pylint:disable=missing-docstring
        return self.tokens[self.position]

    def advance(self):  # pylint:disable=missing-docstring
        token = self.tokens[self.position]
        self.position += 1
        return token

    def accept(self, kind, *texts):
        """
        Consume the current token if it has the given kind (and one of the given texts).
        """
        token = self.current
        if token.kind == kind and (not texts or token.text in texts):
            return self.advance()
        return None

    def error(self, message, token=None):  # pylint:disable=missing-docstring
        token = token or self.current
        if token.kind == END:
            message = 'unexpected end of input' if not message else message
            span = (len(self.text), len(self.text))
        else:
            span = token.span
        return ParseError(span, message, self.text)

    def expect(self, kind, text):  # pylint:disable=missing-docstring
        token = self.accept(kind, text)
        if token is None:
            if self.current.kind == END:
                raise self.error('unexpected end of input, expected %r' % text)
            raise self.error('expected %r, got %r' % (text, self.current.text))
        return token

    def finish(self, node):  # pylint:disable=missing-docstring
        if self.current.kind != END:
            raise self.error('unexpected %r' % self.current.text)
        return node

    def comparison(self):  # pylint:disable=missing-docstring
        left = self.sum()
        token = self.accept(COMPARISON)
        if token is None:
            raise self.error('expected a comparison operator' if self.current.kind != END else
                             'unexpected end of input, expected a comparison operator')
        right = self.sum()
        return Comparison(token.text, left, right, span=(left.span[0], right.span[1]))

    def sum(self):  # pylint:disable=missing-docstring
        node = self.product()
        while True:
            token = self.accept(OPERATOR, '+', '-')
            if token is None:
                return node
            right = self.product()
            node = _fold(BinaryOp(token.text, node, right, span=(node.span[0], right.span[1])))

    def product(self):  # pylint:disable=missing-docstring
        node = self.unary()
        while True:
            token = self.accept(OPERATOR, '*', '/')
            if token is None:
                return node
            right = self.unary()
            node = _fold(BinaryOp(token.text, node, right, span=(node.span[0], right.span[1])))

    def unary(self):  # pylint:disable=missing-docstring
        token = self.accept(OPERATOR, '-', '+')
        if token is not None:
            operand = self.unary()
            return _fold(UnaryOp(token.text, operand, span=(token.span[0], operand.span[1])))
        return self.power()

    def power(self):  # pylint:disable=missing-docstring
        base = self.atom()
        token = self.accept(OPERATOR, '^', '**')
        if token is None:
            return base
        exponent = self.unary()
        return _fold(BinaryOp('^', base, exponent, span=(base.span[0], exponent.span[1])))

    def atom(self):  # pylint:disable=missing-docstring
        token = self.current
        if token.kind == NUMBER:
            self.advance()
            return Number(float(token.text), span=token.span)
        if token.kind == NAME:
            self.advance()
            if self.accept(OPERATOR, '('):
                return self.call(token)
            if token.text in FUNCTIONS:
                raise self.error('function %r needs an argument' % token.text, token)
            if token.text in self.coords:
                return Variable(token.text, self.coords[token.text], span=token.span)
            if token.text in self.consts:
                return Constant(token.text, span=token.span)
            raise self.error('unknown identifier %r' % token.text, token)
        if self.accept(OPERATOR, '('):
            node = self.sum()
            closing = self.expect(OPERATOR, ')')
            return _respan(node, (token.span[0], closing.span[1]))
        if token.kind == END:
            raise self.error('unexpected end of input')
        raise self.error('unexpected %r' % token.text)

    def call(self, name):  # pylint:disable=missing-docstring
        if name.text not in FUNCTIONS:
            raise self.error('unknown function %r' % name.text, name)
        if self.current.kind == OPERATOR and self.current.text == ')':
            raise self.error('function %r takes exactly 1 argument (0 given)' % name.text, name)
        argument = self.sum()
        count = 1
        while self.accept(OPERATOR, ','):
            self.sum()
            count += 1
        if count != 1:
            raise self.error('function %r takes exactly 1 argument (%d given)' % (name.text, count), name)
        closing = self.expect(OPERATOR, ')')
        return _fold(Call(name.text, argument, span=(name.span[0], closing.span[1])))


def _respan(node, span):
    values = dict((k, getattr(node, k)) for k in node.__dataclass_fields__ if k != 'span')
    return type(node)(span=span, **values)


def _fold(node):
    """
    Replace a node whose operands are all literals by the literal of its value.

    Folding is skipped when the value is singular or not finite, so that evaluation reports the error with its span.
    """
    if not all(isinstance(child, Number) for child in node.children()):
        return node
    from .evaluator import evaluate
    try:
        value = evaluate(node, [])
    except (SublabError, ArithmeticError, ValueError):
        return node
    if not math.isfinite(value):
        return node
    return Number(float(value), span=node.span)


def parse_expr(text, coords=(), consts=()):
    """
    Parse a scalar expression.

    :param text: expression source
    :type text: str
    :param coords: chart coordinate names, in chart order
    :type coords: list[str]
    :param consts: names (or name to value mapping) of constants the expression may use
    :return: syntax tree
    :rtype: sublab.expr.nodes.Node
    :raises ParseError: on syntax errors, unknown identifiers and arity mismatches
    """
    parser = _Parser(text, list(coords), consts)
    return parser.finish(parser.sum())


def parse_constraint(text, coords=(), consts=()):
    """
    Parse a domain constraint such as ``x^2 + y^2 >= 0.25``.

    :rtype: sublab.expr.nodes.Comparison
    """
    parser = _Parser(text, list(coords), consts)
    return parser.finish(parser.comparison())
