#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Coordinate charts: named coordinates, a bounding box and optional constraints.
"""
import logging

import numpy as np

from ..expr import parse_constraint, evaluate, Comparison, to_string
from ..jets import lift_point
from ..exceptions import InvalidPointError, ModelBuildError, SublabError

logger = logging.getLogger(__name__)


class Chart(object):
    """
    Local coordinates with a box domain and optional exclusion constraints.

    :param coords: coordinate names
    :type coords: list[str]
    :param bounds: one (low, high) pair per coordinate
    :param constraints: comparisons that in-domain points satisfy, e.g. ``"x^2 + y^2 >= 0.25"``
    :type constraints: list[str]
    :param consts: constant values usable in constraints
    :type consts: dict
    """

    def __init__(self, coords, bounds, constraints=(), consts=None):
        self.coords = tuple(coords)
        if not self.coords:
            raise ModelBuildError('a chart needs at least one coordinate')
        if len(set(self.coords)) != len(self.coords):
            raise ModelBuildError('duplicated coordinate names %s' % list(self.coords))
        bounds = np.array(bounds, dtype=float)
        if bounds.shape != (len(self.coords), 2):
            raise ModelBuildError('chart %s needs one (low, high) pair per coordinate, got %s'
                                  % (list(self.coords), bounds.tolist()))
        if not np.all(np.isfinite(bounds)) or np.any(bounds[:, 0] >= bounds[:, 1]):
            raise ModelBuildError('chart bounds must be finite and non empty, got %s' % bounds.tolist())
        self.bounds = bounds
        self.consts = dict(consts or {})
        self.constraints = tuple(c if isinstance(c, Comparison) else parse_constraint(c, self.coords, self.consts)
                                 for c in constraints)

    @property
    def dim(self):  # pylint:disable=missing-docstring
        return len(self.coords)

    def in_box(self, point):
        """
        Whether point lies in the bounding box.
        """
        point = np.asarray(point, dtype=float)
        return bool(np.all(point >= self.bounds[:, 0]) and np.all(point <= self.bounds[:, 1]))

    def contains(self, point):
        """
        Whether point is in the domain: inside the box and satisfying every constraint.

        :rtype: bool
        """
        point = np.asarray(point, dtype=float).reshape(-1)
        if point.size != self.dim or not np.all(np.isfinite(point)) or not self.in_box(point):
            return False
        for constraint in self.constraints:
            try:
                if not evaluate(constraint, point.tolist(), self.consts):
                    return False
            except SublabError as exc:
                logger.debug('constraint %s failed at %s: %s', to_string(constraint), point.tolist(), exc)
                return False
        return True

    def sample(self, rng):
        """
        Uniform point of the bounding box.

        :param rng: random generator
        :type rng: numpy.random.Generator
        :rtype: numpy.ndarray
        """
        return rng.uniform(self.bounds[:, 0], self.bounds[:, 1])

    def lift(self, point, order=4, active=None):
        """
        Coordinate jets at a point of this chart.

        :rtype: sublab.jets.Jet
        """
        point = np.asarray(point, dtype=float).reshape(-1)
        if point.size != self.dim:
            raise InvalidPointError('chart %s expects %d coordinates, got %s'
                                    % (list(self.coords), self.dim, point.tolist()))
        return lift_point(point, active=active, order=order)

    def __repr__(self):
        return '<Chart %s>' % ', '.join(self.coords)
