#!/usr/bin/env python
# -*- coding: utf-8 -*-
# pylint: disable=no-self-use, pointless-statement, missing-docstring, invalid-name
import math

import numpy as np
import pytest

from ..expr import parse_expr, evaluate
from ..geometry import Chart, MetricField
from ..maps import SmoothMap
from ..submersion import (RiemannianSubmersion, submersion_jets, split_spaces, adapted_frame, structure_coefficients,
                          tension_reduced, bitension_reduced, divergence_tension, bitension_match,
                          tension_reduction_residual, curvature_term_residual, laplacian_split, fibre_variation,
                          vertical_derivative, horizontal_gradient, EinsteinData, einstein_residuals, obata_residual,
                          check_einstein, Tolerances, PointRecord, derive_verdict, tally_signs, resolve_sign,
                          evaluate_point, admissible, worker_count, classify, HARMONIC, PROPER_BIHARMONIC, NEITHER)
from ..zoo import build_model
from ..zoo.models.spheres import round_sphere
from ..zoo.models.warped import LOUBEAU_OU_F
from ..zoo.common import flat_chart
from ..exceptions import (ModelBuildError, RankDeficientError, EinsteinCheckError, SamplingError, ConfigError)

HOPF_POINTS = [[0.4, 0.3, -1.0], [1.1, -2.0, 0.5], [0.8, 0.0, 2.5]]
WARPED_POINTS = [[0.3, 0.2, -0.4], [1.0, -0.5, 0.1], [1.7, 0.9, 0.9]]
FLAG_POINTS = [[0.1, -0.2, 0.3], [-0.4, 0.25, -0.1], [0.3, 0.3, 0.45]]
SPHERE_POINTS = [[0.5, 0.2, -0.4], [1.4, -2.5, 0.3], [2.6, 1.0, 0.9]]


def test_submersion_dimensions():
    _, total = flat_chart(['x', 'y', 'z', 'w'], [[0, 1]] * 4)
    _, base = flat_chart(['x', 'y'], [[0, 1]] * 2)
    with pytest.raises(ModelBuildError):
        RiemannianSubmersion(total, base, ['x', 'y'])


def test_rank_deficient():
    _, total = flat_chart(['x', 'y', 't'], [[-1, 1]] * 3)
    _, base = flat_chart(['u', 'v'], [[-1, 1]] * 2)
    submersion = RiemannianSubmersion(total, base, ['x^2', 'y'])
    with pytest.raises(RankDeficientError):
        submersion.jets([0.0, 0.3, 0.1])
    assert not admissible(submersion, np.array([0.0, 0.3, 0.1]))
    assert admissible(submersion, np.array([0.5, 0.3, 0.1]))


def test_not_a_submersion():
    with pytest.raises(ModelBuildError):
        submersion_jets(build_model('inversion'), [1.0, 0.5, -0.5, 1.0])


def test_product():
    model = build_model('product')
    point = [0.1, -0.3, 0.7]
    split = split_spaces(model, point)
    np.testing.assert_allclose(np.abs(split.vertical), [[0.0, 0.0, 1.0]], atol=1e-14)
    np.testing.assert_allclose(split.horizontal_projector, np.diag([1.0, 1.0, 0.0]), atol=1e-14)
    coefficients = structure_coefficients(model, point)
    np.testing.assert_allclose(coefficients.kappa.value, 0.0, atol=1e-14)
    assert coefficients.horizontal_remainder < 1e-14
    np.testing.assert_allclose(tension_reduced(model, point), 0.0, atol=1e-14)


@pytest.mark.parametrize('model_id', ['product', 'hopf', 'berger', 'loubeau_ou', 'warped_custom', 'warped_sphere',
                                      'flag_local'])
def test_adapted_frame(model_id):
    model = build_model(model_id)
    point = model.domain.bounds.mean(axis=1) + 0.1
    jets = submersion_jets(model, point)
    residuals = jets.residuals()
    assert residuals.orthonormality < 1e-10
    assert residuals.isometry < 1e-10
    assert residuals.kernel < 1e-10
    frame = adapted_frame(model, point)
    assert frame.frame.shape == (model.domain.dim, model.domain.dim)
    assert vertical_derivative(jets) < 1e-9


@pytest.mark.parametrize('point', HOPF_POINTS)
def test_hopf_harmonic(point):
    model = build_model('hopf')
    jets = model.jets(point)
    assert jets.tension.normalized <= 1e-7
    np.testing.assert_allclose(jets.kappa.value, 0.0, atol=1e-9)
    assert check_einstein(jets.codomain, model.einstein) < 1e-8


@pytest.mark.parametrize('eps', [0.5, 2.0])
def test_berger_harmonic(eps):
    model = build_model('berger', {'eps': eps})
    for point in HOPF_POINTS:
        assert model.jets(point).tension.normalized <= 1e-7


@pytest.mark.parametrize('point', WARPED_POINTS)
def test_loubeau_ou(point):
    model = build_model('loubeau_ou')
    jets = model.jets(point)
    f = evaluate(parse_expr(LOUBEAU_OU_F, ['x'], model.consts), [point[0]], model.consts)
    assert abs(float(jets.kappa.value[0])) == pytest.approx(abs(f), rel=1e-9)
    assert float(jets.kappa.value[1]) == pytest.approx(0.0, abs=1e-9)
    assert tension_reduction_residual(jets) <= 1e-8
    assert jets.tension.normalized >= 1e-2
    assert jets.bitension.normalized <= 1e-6
    match = bitension_match(jets)
    assert min(match.values()) <= 1e-6 < max(match.values())
    assert laplacian_split(jets).residual <= 1e-8
    assert fibre_variation(jets) <= 1e-7
    assert divergence_tension(model, point).relation < 1e-8


@pytest.mark.parametrize('model_id', ['product', 'hopf', 'berger'])
def test_horizontal_gradient_parallel(model_id):
    model = build_model(model_id)
    point = model.domain.bounds.mean(axis=1) + 0.1
    assert horizontal_gradient(model.jets(point)) == pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize('point', WARPED_POINTS)
def test_horizontal_gradient_warped(point):
    x = point[0]
    jets = build_model('warped_custom').jets(point)
    assert horizontal_gradient(jets) == pytest.approx(1.0 / (1.0 + x), rel=1e-7)
    jets = build_model('loubeau_ou').jets(point)
    expected = 1.0 / (2.0 * math.sinh(x / 2.0) ** 2) / (1.0 + 1.0 / math.tanh(x / 2.0))
    assert horizontal_gradient(jets) == pytest.approx(expected, rel=1e-7)


def test_horizontal_gradient_record():
    record = evaluate_point(build_model('warped_custom'), 0, np.array(WARPED_POINTS[1]))
    assert record.horizontal_gradient == pytest.approx(0.5, rel=1e-7)
    assert record.as_dict()['horizontal_gradient'] == record.horizontal_gradient


def test_reduced_bitension_variants():
    model = build_model('loubeau_ou')
    point = WARPED_POINTS[1]
    reduced = bitension_reduced(model, point)
    np.testing.assert_allclose(bitension_reduced(model, point, 'plus'), reduced.plus)
    np.testing.assert_allclose(reduced.plus - reduced.minus, 2 * reduced.drift)
    with pytest.raises(ValueError):
        bitension_reduced(model, point, 'sideways')


def test_warped_custom_not_biharmonic():
    model = build_model('warped_custom')
    jets = model.jets(WARPED_POINTS[1])
    assert jets.tension.normalized > 1e-3
    assert jets.bitension.normalized > 1e-3


@pytest.mark.parametrize('l', [0, 1])
def test_flag_minimal_fibres(l):
    model = build_model('flag_local', {'l': l})
    for point in FLAG_POINTS:
        np.testing.assert_allclose(model.jets(point).kappa.value, 0.0, atol=1e-9)


@pytest.mark.parametrize('l', [2, 3])
def test_flag_divergence(l):
    model = build_model('flag_local', {'l': l})
    for point in FLAG_POINTS:
        jets = model.jets(point)
        div = divergence_tension(model, point)
        assert div.relation <= 1e-9
        assert div.div_tension == -div.div_x
        assert jets.structure_coefficients.horizontal_remainder < 1e-9


def test_flag_record():
    model = build_model('flag_local')
    record = evaluate_point(model, 0, np.array(FLAG_POINTS[0]))
    assert record.sign == 'inapplicable'
    assert record.r1 is not None and record.r2 is not None
    assert record.curvature_term == pytest.approx(0.0, abs=1e-12)


def test_flag_invalid():
    with pytest.raises(ModelBuildError):
        build_model('flag_local', {'a': 1.0, 'b': 1.0, 'c': 1.0, 'd': 1.0})


def test_hopf_curvature_term():
    model = build_model('hopf')
    jets = model.jets(HOPF_POINTS[0])
    assert curvature_term_residual(jets) <= 1e-7


@pytest.mark.parametrize('point', SPHERE_POINTS)
def test_warped_sphere(point):
    model = build_model('warped_sphere')
    jets = model.jets(point)
    theta = point[0]
    expected = (math.sin(theta) / 2) / (1 + math.cos(theta) / 2)
    assert abs(float(jets.kappa.value[0])) == pytest.approx(expected, rel=1e-9)
    assert float(jets.kappa.value[1]) == pytest.approx(0.0, abs=1e-9)
    assert jets.tension.normalized > 1e-3
    assert check_einstein(jets.codomain, model.einstein) < 1e-8
    assert curvature_term_residual(jets) <= 1e-7
    assert tension_reduction_residual(jets) <= 1e-8
    assert laplacian_split(jets).residual <= 1e-8
    assert divergence_tension(model, point).relation < 1e-8
    assert horizontal_gradient(jets) > 1e-3


def test_warped_sphere_invalid():
    with pytest.raises(ModelBuildError):
        build_model('warped_sphere', {'beta': '0 * theta'})
    with pytest.raises(ModelBuildError):
        build_model('warped_sphere', {'clearance': 0.0})


def test_einstein_strict():
    model = build_model('hopf')
    residuals = einstein_residuals(model, model.einstein, HOPF_POINTS[0])
    assert residuals.base < 1e-8
    with pytest.raises(EinsteinCheckError):
        einstein_residuals(model, EinsteinData(1.0), HOPF_POINTS[0])


def test_einstein_data():
    assert EinsteinData(0.5, 1.0).weakly_stable
    assert not EinsteinData(2.0, 3.0).weakly_stable
    assert EinsteinData(1.0).weakly_stable is None
    with pytest.raises(ModelBuildError):
        EinsteinData(1.0, -1.0)
    with pytest.raises(ModelBuildError):
        EinsteinData(float('inf'))


def test_obata_cp1():
    metric = round_sphere(math.sqrt(2.0))
    residuals = obata_residual(metric, EinsteinData(0.5, 1.0), 'cos(theta)', [0.9, 0.3])
    assert residuals.eigres <= 1e-8
    assert residuals.eigres_lambda1 <= 1e-8
    assert residuals.r1 <= 1e-8
    assert residuals.jres > 1e-3
    assert residuals.base <= 1e-8


def test_tolerances():
    with pytest.raises(ConfigError):
        Tolerances(harmonic=0.0)
    with pytest.raises(ConfigError):
        Tolerances(match=float('nan'))


def test_verdicts():
    tolerances = Tolerances()
    assert derive_verdict([], tolerances) is None
    assert derive_verdict([{'tension': 1e-9, 'bitension_general': 1e-9}], tolerances) == HARMONIC
    assert derive_verdict([{'tension': 1e-2, 'bitension_general': 1e-2}], tolerances) == NEITHER
    record = PointRecord(0, [0.0], 0.5, 1e-9, 0.0, 0.0, sign='minus')
    assert derive_verdict([record], tolerances) == PROPER_BIHARMONIC
    assert tally_signs([record])['minus'] == 1


def test_resolve_sign():
    assert resolve_sign({'plus': 2, 'minus': 1}) == 'inconsistent'
    assert resolve_sign({'plus': 2, 'neither': 1}) == 'inconsistent'
    assert resolve_sign({'plus': 2, 'both': 1}) == 'plus'
    assert resolve_sign({'both': 3, 'inapplicable': 1}) == 'undetermined'


def test_worker_count(monkeypatch):
    monkeypatch.setenv('SUBLAB_THREADS', '3')
    assert worker_count() == 3
    monkeypatch.setenv('SUBLAB_THREADS', 'zero')
    with pytest.raises(ConfigError):
        worker_count()
    monkeypatch.setenv('SUBLAB_THREADS', '0')
    with pytest.raises(ConfigError):
        worker_count()
    monkeypatch.delenv('SUBLAB_THREADS')
    assert worker_count() >= 1


def test_classify_product():
    report = classify(build_model('product'), points=3, seed=1)
    assert report.verdict == HARMONIC
    assert len(report.records) == 3
    assert [record.index for record in report.records] == [0, 1, 2]
    assert report.sign_tally['both'] == 3


def test_classify_loubeau_ou():
    report = classify(build_model('loubeau_ou'), points=4, seed=0)
    assert report.verdict == PROPER_BIHARMONIC
    assert report.sign_resolution in ('plus', 'minus')
    assert report.maxima()['bitension_general'] <= 1e-6


def test_classify_warped_custom():
    assert classify(build_model('warped_custom'), points=3, seed=0).verdict == NEITHER


def test_classify_inversion():
    report = classify(build_model('inversion'), points=3, seed=0)
    assert report.verdict == PROPER_BIHARMONIC
    assert report.sign_resolution == 'undetermined'
    assert all(record.sign is None for record in report.records)


def test_classify_deterministic():
    model = build_model('hopf')
    first = classify(model, points=3, seed=7, threads=1)
    second = classify(model, points=3, seed=7, threads=2)
    assert [record.as_dict() for record in first.records] == [record.as_dict() for record in second.records]
    assert first.attempts == second.attempts


def test_classify_exhausted():
    chart = Chart(['x', 'y'], [[0, 1], [0, 1]], constraints=['x >= 5'])
    model = SmoothMap.identity(MetricField.euclidean(chart))
    with pytest.raises(SamplingError) as excinfo:
        classify(model, points=2, seed=0)
    assert excinfo.value.attempts == 200
    assert excinfo.value.accepted == 0


def test_classify_invalid_points():
    with pytest.raises(ConfigError):
        classify(build_model('product'), points=0)


def test_classify_einstein_mismatch():
    model = build_model('product')
    model.einstein = EinsteinData(0.5)
    with pytest.raises(EinsteinCheckError):
        classify(model, points=1, seed=0)
