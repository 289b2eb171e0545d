#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Fields over a chart: anything that maps a point jet to a tensor jet.

Expression fields are the common case (metric matrices, vector field components, map components). Derived quantities
enter the same pipeline through :class:`CallableField`.
"""
import numpy as np

from ..expr import parse_expr, eval_expr_jet, evaluate, Node
from ..jets import Jet, stack
from ..exceptions import ModelBuildError, ParseError


def _shape_of(nested):
    if isinstance(nested, (list, tuple)):
        if not nested:
            raise ModelBuildError('empty component list')
        inner = [_shape_of(item) for item in nested]
        if any(shape != inner[0] for shape in inner):
            raise ModelBuildError('ragged component list')
        return (len(nested),) + inner[0]
    return ()


def _flatten(nested):
    if isinstance(nested, (list, tuple)):
        for item in nested:
            for leaf in _flatten(item):
                yield leaf
    else:
        yield nested


class Field(object):
    """
    Base class of fields.

    :param chart: chart the field lives on
    :param shape: tensor shape of the values
    """

    def __init__(self, chart, shape):
        self.chart = chart
        self.shape = tuple(shape)

    def evaluate(self, x):
        """
        Field jet at a point jet.

        :param x: vector jet of the chart coordinates
        :type x: Jet
        :rtype: Jet
        """
        raise NotImplementedError  # pragma: no cover

    def value_at(self, point):
        """
        Plain value at a point.

        :rtype: numpy.ndarray
        """
        return np.asarray(self.evaluate(self.chart.lift(point, order=0)).value)


class ExprField(Field):
    """
    Field whose components are expressions over the chart coordinates.

    :param components: (nested lists of) expression texts, numbers or trees
    :param chart: chart of the coordinates
    :type chart: sublab.geometry.Chart
    :param consts: constant values
    :type consts: dict
    """

    def __init__(self, components, chart, consts=None):
        super(ExprField, self).__init__(chart, _shape_of(components))
        self.consts = dict(chart.consts)
        self.consts.update(consts or {})
        self.sources = list(_flatten(components))
        self.exprs = [self._parse(source) for source in self.sources]

    def _parse(self, source):
        if isinstance(source, Node):
            return source
        if isinstance(source, (int, float)):
            source = repr(float(source))
        try:
            return parse_expr(source, self.chart.coords, self.consts)
        except ParseError as exc:
            raise ModelBuildError('invalid expression %r: %s' % (source, exc))

    def evaluate(self, x):
        jets = [eval_expr_jet(expr, x, self.consts) for expr in self.exprs]
        if not self.shape:
            return jets[0]
        return stack(jets, basis=x.basis).reshape(self.shape)

    def value_at(self, point):
        point = np.asarray(point, dtype=float).reshape(-1).tolist()
        values = [float(evaluate(expr, point, self.consts)) for expr in self.exprs]
        return np.array(values).reshape(self.shape)


class CallableField(Field):
    """
    Field computed by a function of the point jet.

    :param function: callable taking a vector jet and returning a jet of the given shape
    """

    def __init__(self, function, chart, shape):
        super(CallableField, self).__init__(chart, shape)
        self.function = function

    def evaluate(self, x):
        ret = self.function(x)
        if not isinstance(ret, Jet):
            ret = Jet.constant(ret, x.basis)
        return ret


class MetricField(ExprField):
    """
    Symmetric matrix of expressions: a Riemannian metric in the chart coordinates.
    """

    def __init__(self, components, chart, consts=None):
        super(MetricField, self).__init__(components, chart, consts)
        n = chart.dim
        if self.shape != (n, n):
            raise ModelBuildError('metric on %d coordinates needs a %dx%d matrix, got shape %s'
                                  % (n, n, n, self.shape))
        for i in range(n):
            for j in range(i + 1, n):
                if self.exprs[i * n + j] != self.exprs[j * n + i]:
                    raise ModelBuildError('metric entries (%d, %d) and (%d, %d) differ' % (i, j, j, i))

    @classmethod
    def diagonal(cls, entries, chart, consts=None):
        """
        Diagonal metric from its diagonal entries.

        :rtype: MetricField
        """
        n = len(entries)
        return cls([[entries[i] if i == j else '0' for j in range(n)] for i in range(n)], chart, consts)

    @classmethod
    def euclidean(cls, chart):
        """
        Flat metric of the chart coordinates.
        """
        return cls.diagonal(['1'] * chart.dim, chart)


def as_field(source, chart, consts=None):
    """
    Field from an expression text, a (nested) list of texts, a tree or a field.

    :rtype: Field
    """
    if isinstance(source, Field):
        return source
    return ExprField(source, chart, consts)
