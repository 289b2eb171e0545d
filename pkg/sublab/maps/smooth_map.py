#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Smooth maps between charted Riemannian manifolds, given by coordinate expressions.
"""
import numpy as np

from ..geometry import ExprField, MetricField
from ..exceptions import ModelBuildError


class SmoothMap(object):
    """
    Map ``phi: (M, g) -> (N, h)`` with codomain coordinates given as expressions of the domain coordinates.

    :param domain_metric: metric g on the domain chart
    :type domain_metric: MetricField
    :param codomain_metric: metric h on the codomain chart
    :type codomain_metric: MetricField
    :param components: one expression per codomain coordinate
    :type components: list[str]
    :param consts: constant values used by the components
    :param name: model id, for reports
    :param params: model parameters, for reports
    :param einstein: Einstein data of the codomain (or of the manifold for identity maps), if known
    :param extras: model specific data (eigenfunctions, Killing fields ...)
    """

    def __init__(self, domain_metric, codomain_metric, components, consts=None, name=None, params=None,
                 einstein=None, extras=None):
        if not isinstance(domain_metric, MetricField) or not isinstance(codomain_metric, MetricField):
            raise ModelBuildError('smooth maps need metric fields on both sides')
        self.domain_metric = domain_metric
        self.codomain_metric = codomain_metric
        self.consts = dict(domain_metric.consts)
        self.consts.update(consts or {})
        self.components = ExprField(list(components), domain_metric.chart, self.consts)
        if self.components.shape != (self.codomain.dim,):
            raise ModelBuildError('map into %d coordinates needs %d components, got shape %s'
                                  % (self.codomain.dim, self.codomain.dim, self.components.shape))
        self.name = name
        self.params = dict(params or {})
        self.einstein = einstein
        self.extras = dict(extras or {})

    @classmethod
    def identity(cls, metric, **kwargs):
        """
        Identity map of a charted Riemannian manifold.

        :rtype: SmoothMap
        """
        return cls(metric, metric, list(metric.chart.coords), **kwargs)

    @property
    def domain(self):
        """
        Domain chart.
        """
        return self.domain_metric.chart

    @property
    def codomain(self):
        """
        Codomain chart.
        """
        return self.codomain_metric.chart

    @property
    def is_submersion(self):  # pylint:disable=missing-docstring
        return False

    def evaluate(self, x):
        """
        Codomain coordinates as jets of the domain point jet.

        :rtype: sublab.jets.Jet
        """
        return self.components.evaluate(x)

    def value_at(self, point):
        """
        Image of a point.

        :rtype: numpy.ndarray
        """
        return np.asarray(self.components.value_at(point), dtype=float)

    def describe(self):
        """
        Model identification for reports.

        :rtype: dict
        """
        return {'model': self.name, 'params': dict(self.params), 'kind': 'submersion' if self.is_submersion else 'map',
                'domain': list(self.domain.coords), 'codomain': list(self.codomain.coords)}

    def __repr__(self):
        return '<%s %s: %s -> %s>' % (type(self).__name__, self.name or '', self.domain, self.codomain)
