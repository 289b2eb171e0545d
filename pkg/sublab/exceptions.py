#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Exceptions raised by sublab.

Every error sublab raises on purpose derives from :class:`SublabError`. Unexpected failures are wrapped
by :class:`sublab.api.SublabException` at the api boundary.
"""


def _format_point(point):
    if point is None:
        return None
    try:
        return '(' + ', '.join('%.17g' % float(x) for x in point) + ')'
    except TypeError:
        return str(point)


class SublabError(Exception):
    """
    Base class of sublab errors.
    """


class InvalidPointError(SublabError, ValueError):
    """
    A point has non-finite coordinates or lies outside of a chart.
    """


class SingularPointError(SublabError):
    """
    Evaluation hit a singularity (division by zero, log or sqrt of a non positive value, overflow ...).

    :param message: what went wrong
    :param point: coordinates of the offending point, when known
    :param span: (start, end) of the expression node that failed, when known
    """
    def __init__(self, message, point=None, span=None):
        self.message = message
        self.point = point
        self.span = span
        super(SingularPointError, self).__init__(self._describe())

    def _describe(self):
        ret = self.message
        if self.span is not None:
            ret += ' [at %d:%d]' % tuple(self.span)
        if self.point is not None:
            ret += ' at point %s' % _format_point(self.point)
        return ret

    def located(self, point=None, span=None):
        """
        Copy of this error with point and span filled in when they are missing.
        :rtype: SingularPointError
        """
        return SingularPointError(self.message,
                                  point=self.point if self.point is not None else point,
                                  span=self.span if self.span is not None else span)


class JetOrderError(SublabError):
    """
    A jet does not carry enough orders for the requested operation.
    """


class DegenerateMetricError(SublabError):
    """
    A metric (or a matrix built from it) is not positive-definite or not invertible at a point.
    """
    def __init__(self, message, point=None):
        self.point = point
        if point is not None:
            message = '%s at point %s' % (message, _format_point(point))
        super(DegenerateMetricError, self).__init__(message)


class RankDeficientError(SublabError):
    """
    The differential of a submersion is not surjective at a point.
    """
    def __init__(self, message, point=None):
        self.point = point
        if point is not None:
            message = '%s at point %s' % (message, _format_point(point))
        super(RankDeficientError, self).__init__(message)


class ParseError(SublabError):
    """
    Syntax error in an expression.

    >>> print(ParseError((3, 4), "unexpected ')'", 'x+1)'))
    unexpected ')' at 3
      x+1)
         ^
    """
    def __init__(self, span, message, text=None):
        self.span = tuple(span)
        self.message = message
        self.text = text
        super(ParseError, self).__init__(self._describe())

    def _describe(self):
        ret = '%s at %d' % (self.message, self.span[0])
        if self.text is not None:
            ret += '\n  ' + self.text + '\n  ' + ' ' * self.span[0] + '^'
        return ret


class ConfigError(SublabError):
    """
    Invalid run configuration (command line or TOML document).
    """
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = '%s (line %s, column %s)' % (message, line, column)
        super(ConfigError, self).__init__(message)


class ModelBuildError(SublabError):
    """
    A model could not be built from its parameters.
    """


class EinsteinCheckError(SublabError):
    """
    The base metric is not Einstein with the announced constant.
    """
    def __init__(self, message, residual=None):
        self.residual = residual
        super(EinsteinCheckError, self).__init__(message)


class SamplingError(SublabError):
    """
    Not enough valid points could be sampled in a domain.
    """
    def __init__(self, message, attempts=None, accepted=None):
        self.attempts = attempts
        self.accepted = accepted
        super(SamplingError, self).__init__(message)
