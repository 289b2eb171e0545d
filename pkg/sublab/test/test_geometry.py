#!/usr/bin/env python
# -*- coding: utf-8 -*-
# pylint: disable=no-self-use, pointless-statement, missing-docstring, invalid-name
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ..geometry import (Chart, MetricField, LocalGeometry, check_positive_definite, christoffel, christoffel_symbols,
                        riemann_ricci, lie_bracket, covariant_derivative, gradient_divergence, killing_residual,
                        einstein_residual, metric_compatibility_residual, bianchi_residual, ricci_symmetry_residual,
                        orthonormal_frame)
from ..zoo.models.hopf import berger_metric, sphere_chart
from ..zoo.models.spheres import round_sphere
from ..exceptions import DegenerateMetricError, ModelBuildError, InvalidPointError


def polar_plane():
    chart = Chart(['r', 't'], [[0.5, 3.0], [-3.0, 3.0]])
    return MetricField.diagonal(['1', 'r^2'], chart)


def test_chart():
    chart = Chart(['x', 'y'], [[-1, 1], [-1, 1]], constraints=['x^2 + y^2 >= 0.25'])
    assert chart.dim == 2
    assert chart.contains([0.8, 0.0])
    assert not chart.contains([0.1, 0.1])
    assert not chart.contains([2.0, 0.0])
    assert not chart.contains([float('nan'), 0.0])
    point = chart.sample(np.random.default_rng(0))
    assert chart.in_box(point)


def test_chart_invalid():
    with pytest.raises(ModelBuildError):
        Chart(['x', 'x'], [[0, 1], [0, 1]])
    with pytest.raises(ModelBuildError):
        Chart(['x'], [[1, 0]])
    with pytest.raises(ModelBuildError):
        Chart(['x', 'y'], [[0, 1]])
    with pytest.raises(InvalidPointError):
        Chart(['x'], [[0, 1]]).lift([0.5, 0.5])


def test_metric_invalid():
    chart = Chart(['x', 'y'], [[0, 1], [0, 1]])
    with pytest.raises(ModelBuildError):
        MetricField([['1', 'x'], ['y', '1']], chart)
    with pytest.raises(ModelBuildError):
        MetricField([['1', '0']], chart)
    with pytest.raises(ModelBuildError):
        MetricField([['1', '0'], ['0', 'x +']], chart)


def test_positive_definite():
    check_positive_definite(np.eye(2))
    with pytest.raises(DegenerateMetricError):
        check_positive_definite(np.diag([1.0, -1.0]), [0.0, 0.0])
    with pytest.raises(DegenerateMetricError):
        LocalGeometry(MetricField.diagonal(['1', 'x'], Chart(['x', 'y'], [[-1, 1], [-1, 1]])), [-0.5, 0.0])


def test_polar_christoffel():
    gamma = christoffel(polar_plane(), [2.0, 0.3]).value
    assert gamma[0, 1, 1] == pytest.approx(-2.0)
    assert gamma[1, 0, 1] == pytest.approx(0.5)
    assert gamma[1, 1, 0] == pytest.approx(0.5)
    assert gamma[0, 0, 0] == pytest.approx(0.0)


def test_polar_flat():
    curvature = riemann_ricci(polar_plane(), [1.3, -0.4])
    np.testing.assert_allclose(curvature.riemann.value, 0.0, atol=1e-12)
    np.testing.assert_allclose(curvature.ricci.value, 0.0, atol=1e-12)


@pytest.mark.parametrize('radius', [1.0, math.sqrt(2.0), 0.5])
def test_round_sphere_einstein(radius):
    metric = round_sphere(radius)
    for point in ([0.4, 0.1], [1.5, -2.0], [2.9, 3.0]):
        assert einstein_residual(metric, 1.0 / radius ** 2, point) < 1e-10


def test_three_sphere_einstein():
    metric = berger_metric(sphere_chart(), 1.0)
    assert einstein_residual(metric, 2.0, [0.6, 0.2, -1.0]) < 1e-10


def test_berger_not_einstein():
    metric = berger_metric(sphere_chart(), 0.5)
    assert einstein_residual(metric, 2.0, [0.6, 0.2, -1.0]) > 1e-3


@pytest.mark.parametrize('eps', [1.0, 0.5, 2.0])
def test_identities(eps):
    metric = berger_metric(sphere_chart(), eps)
    point = [0.7, 0.3, -0.2]
    assert metric_compatibility_residual(metric, point) < 1e-9
    assert bianchi_residual(metric, point) < 1e-9
    assert ricci_symmetry_residual(metric, point) < 1e-9


def test_corrupted_christoffel():
    def flipped(g, ginv):
        return -christoffel_symbols(g, ginv)

    metric = round_sphere(1.0)
    assert metric_compatibility_residual(metric, [0.8, 0.1]) < 1e-9
    assert metric_compatibility_residual(metric, [0.8, 0.1], christoffel_function=flipped) > 1e-3


@settings(max_examples=25, deadline=None)
@given(a=st.floats(min_value=0.0, max_value=1.0), b=st.floats(min_value=-0.3, max_value=0.3),
       x=st.floats(min_value=-0.5, max_value=0.5), y=st.floats(min_value=-0.5, max_value=0.5))
def test_metric_compatibility_property(a, b, x, y):
    chart = Chart(['x', 'y'], [[-1, 1], [-1, 1]])
    metric = MetricField([['1 + a * x^2', 'b * x * y'], ['b * x * y', '1 + a * y^2 + sin(x)^2']], chart,
                         {'a': a, 'b': b})
    assert metric_compatibility_residual(metric, [x, y]) < 1e-9
    assert bianchi_residual(metric, [x, y]) < 1e-9
    assert ricci_symmetry_residual(metric, [x, y]) < 1e-9


def test_orthonormal_frame():
    metric = berger_metric(sphere_chart(), 1.5)
    geometry = LocalGeometry(metric, [0.5, 0.1, 0.2])
    frame = np.asarray(geometry.frame.value)
    np.testing.assert_allclose(frame @ geometry.g.value @ frame.T, np.eye(3), atol=1e-12)
    with pytest.raises(DegenerateMetricError):
        orthonormal_frame(geometry.g, candidates=[np.array([1.0, 0.0, 0.0]), np.array([2.0, 0.0, 0.0])])


def test_killing():
    metric = round_sphere(1.0)
    assert killing_residual(metric, ['0', '1'], [0.7, 0.2]) < 1e-12
    assert killing_residual(metric, ['1', '0'], [0.7, 0.2]) > 0.1


def test_gradient_divergence():
    metric = round_sphere(1.0)
    result = gradient_divergence(metric, [0.7, 0.2], function='cos(theta)', vector=['0', '1'])
    assert float(result.laplacian.value) == pytest.approx(2 * math.cos(0.7))
    assert result.gradient.value.tolist() == pytest.approx([-math.sin(0.7), 0.0])
    assert float(result.divergence.value) == pytest.approx(0.0, abs=1e-12)


def test_lie_bracket():
    chart = Chart(['x', 'y'], [[-1, 1], [-1, 1]])
    bracket = lie_bracket(['1', '0'], ['0', 'x'], [0.3, 0.4], chart=chart)
    assert bracket.value.tolist() == pytest.approx([0.0, 1.0])


def test_covariant_derivative():
    metric = polar_plane()
    derivative = covariant_derivative(metric, ['0', '1'], [0.0, 1.0], [2.0, 0.0])
    assert derivative.value.tolist() == pytest.approx([-2.0, 0.0])
