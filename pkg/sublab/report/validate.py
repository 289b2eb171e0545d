#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Self validation: identities every build must satisfy, checked on the built-in models.

Each suite returns a :class:`SuiteResult`; a failing suite is data, never an exception.
"""
import itertools
import logging
from collections import OrderedDict, namedtuple

import numpy as np

from ..expr import parse_expr, eval_expr_jet, fd_check, relative_error
from ..geometry import (metric_compatibility_residual, bianchi_residual, ricci_symmetry_residual,
                        einstein_residual)
from ..jets import lift_point, einsum
from ..maps import MapJets, normalized
from ..submersion import (classify, admissible, tally_signs, resolve_sign, obata_residual, tension_reduction_residual,
                          curvature_term_residual, laplacian_split, divergence, vertical_derivative, Tolerances,
                          HARMONIC, SIGN_CATEGORIES)
from ..zoo import MODELS, build_model
from ..exceptions import SublabError

logger = logging.getLogger(__name__)

SuiteResult = namedtuple('SuiteResult', ['name', 'passed', 'worst', 'tolerance', 'detail'])

#: points per model and suite
VALIDATION_POINTS = 100

#: seed of the validation samples
VALIDATION_SEED = 0

#: expressions of the built-in models at interior points, checked against finite differences through order 3
FD_CASES = (
    ('x1/(x1^2 + x2^2 + x3^2 + x4^2)', ('x1', 'x2', 'x3', 'x4'), {}, (1.0, 0.5, -0.5, 1.0)),
    ('c2 * exp(-c1 * x) * (1 - exp(c1 * x))^2', ('x',), {'c1': 1.0, 'c2': 1.0}, (0.7,)),
    ('exp(x^2/2)', ('x',), {}, (1.0,)),
    ('sin(eta)^2 + 0.5 * sin(eta)^4', ('eta', 'xi1', 'xi2'), {}, (0.7, 0.3, -0.2)),
    ('exp(-2 * K * u * (A * s + B * t))', ('s', 't', 'u'), {'K': 2.0, 'A': 1.0, 'B': 1.0}, (0.2, -0.1, 0.3)),
    ('sqrt(x^2 + y^2) * cos(y) - log(1 + x^2)', ('x', 'y'), {}, (0.8, -0.4)),
)

TOLERANCES = OrderedDict([
    ('jet_vs_fd', 1e-6),
    ('metric_compatibility', 1e-9),
    ('bianchi', 1e-9),
    ('ricci_symmetry', 1e-9),
    ('frame_independence', 1e-9),
    ('laplacian_split', 1e-8),
    ('tension_reduction', 1e-8),
    ('curvature_term', 1e-7),
    ('einstein_constants', 1e-8),
    ('divergence_relation', 1e-8),
    ('vertical_vanishing', 1e-9),
    ('harmonic_implies_biharmonic', Tolerances().biharmonic),
    ('sign_resolution', Tolerances().match),
])


def draw_points(model, count=VALIDATION_POINTS, seed=VALIDATION_SEED):
    """
    First admissible points of a seeded sample of the model domain.

    :rtype: list[numpy.ndarray]
    """
    rng = np.random.default_rng(seed)
    points = []
    for _ in range(100 * count):
        candidate = model.domain.sample(rng)
        if admissible(model, candidate):
            points.append(candidate)
            if len(points) == count:
                break
    return points


def _models():
    return [build_model(model_id) for model_id in MODELS]


def _result(name, values, detail=None):
    tolerance = TOLERANCES[name]
    worst = max(values) if values else 0.0
    passed = bool(values) and worst <= tolerance
    return SuiteResult(name, passed, float(worst), tolerance, detail or OrderedDict())


def _metrics(model):
    yield model.domain_metric, draw_points(model)
    if model.codomain_metric is not model.domain_metric:
        yield model.codomain_metric, [model.value_at(point) for point in draw_points(model)]


def _multi_indices(dim, order):
    for alpha in itertools.product(range(order + 1), repeat=dim):
        if 1 <= sum(alpha) <= order:
            yield alpha


def jet_vs_fd():
    """
    Jet derivatives of expressions against Richardson extrapolated central differences, through order 3.
    """
    values = []
    for text, coords, consts, point in FD_CASES:
        expr = parse_expr(text, coords, consts)
        jet = eval_expr_jet(expr, lift_point(point, order=3), consts)
        for alpha in _multi_indices(len(coords), 3):
            values.append(relative_error(fd_check(expr, point, alpha, consts=consts), jet.derivative(alpha)))
    return _result('jet_vs_fd', values, OrderedDict(cases=len(FD_CASES), derivatives=len(values)))


def _geometry_suite(name, residual, models):
    values = []
    for model in models:
        for metric, points in _metrics(model):
            values.extend(residual(metric, point) for point in points)
    return _result(name, values)


def metric_compatibility(models, christoffel_function=None):
    """
    ``nabla g = 0`` for the connection computed by christoffel_function, the Levi-Civita symbols by default.
    """
    return _geometry_suite('metric_compatibility',
                           lambda metric, point: metric_compatibility_residual(metric, point, christoffel_function),
                           models)


def bianchi(models):  # pylint:disable=missing-docstring
    return _geometry_suite('bianchi', bianchi_residual, models)


def ricci_symmetry(models):  # pylint:disable=missing-docstring
    return _geometry_suite('ricci_symmetry', ricci_symmetry_residual, models)


def frame_independence(models):
    """
    Tension traced over a randomly rotated orthonormal frame against the Gram-Schmidt frame.
    """
    rng = np.random.default_rng(VALIDATION_SEED)
    values = []
    for model in models:
        for point in draw_points(model):
            jets = MapJets(model, point)
            rotation, _ = np.linalg.qr(rng.normal(size=(jets.domain.dim, jets.domain.dim)))
            rotated = einsum('rs,si->ri', rotation, jets.frame)
            value = np.asarray(jets.trace(jets.second_fundamental_form, rotated).value)
            tension = jets.tension
            values.append(normalized(jets.h_norm(value - tension.value),
                                     [jets.h_norm(piece) for piece in tension.pieces]))
    return _result('frame_independence', values)


def _submersion_suite(name, residual, models, select=None):
    values = []
    for model in models:
        if not model.is_submersion:
            continue
        for point in draw_points(model):
            jets = model.jets(point)
            if select is None or select(jets):
                values.append(residual(jets))
    return _result(name, values)


def _curved_base(jets):
    return float(np.max(np.abs(jets.codomain.ricci.value))) > 1e-12


def _divergence_relation(jets):
    div = divergence(jets)
    return normalized(div.relation, [abs(div.div_x), abs(div.frame_derivatives), abs(div.correction)])


def einstein_constants(models):
    """
    ``Ric = c Id`` on every model with Einstein data, and the first eigenvalue of the declared eigenfunctions, on the
    base for submersions.
    """
    values = []
    for model in models:
        if model.einstein is None or not model.einstein.strict:
            continue
        metric = model.domain_metric if not model.is_submersion else model.codomain_metric
        points = draw_points(model)
        if model.is_submersion:
            points = [model.value_at(point) for point in points]
        values.extend(einstein_residual(metric, model.einstein.c, point) for point in points)
        eigenfunction = model.extras.get('eigenfunction')
        if eigenfunction is not None and model.einstein.lambda1 is not None:
            values.extend(obata_residual(metric, model.einstein, eigenfunction, point).eigres_lambda1
                          for point in points)
    return _result('einstein_constants', values)


def _classifications(models):
    ret = OrderedDict()
    for model in models:
        ret[model.name] = classify(model, VALIDATION_POINTS, VALIDATION_SEED, threads=1)
    return ret


def harmonic_implies_biharmonic(classifications):
    """
    Every HARMONIC verdict has bitension within tolerance.
    """
    values = []
    harmonic = []
    for name, classification in classifications.items():
        if classification.verdict == HARMONIC:
            harmonic.append(name)
            values.extend(record.bitension_general for record in classification.records)
    return _result('harmonic_implies_biharmonic', values, OrderedDict(harmonic=harmonic))


def sign_resolution(classifications):
    """
    One reduced bitension sign variant matches the definition-level bitension on every submersion point where the
    reduced formula applies.
    """
    tally = dict.fromkeys(SIGN_CATEGORIES, 0)
    values = []
    for classification in classifications.values():
        for category, count in tally_signs(classification.records).items():
            tally[category] += count
    resolution = resolve_sign(tally)
    for classification in classifications.values():
        for record in classification.records:
            if record.sign in ('plus', 'minus', 'both') and resolution in ('plus', 'minus'):
                values.append(getattr(record, 'match_' + resolution))
    result = _result('sign_resolution', values, OrderedDict(resolution=resolution, tally=tally))
    return result._replace(passed=result.passed and resolution in ('plus', 'minus'))


def _failed(name, exc):
    logger.debug('suite %s raised %s', name, exc)
    return SuiteResult(name, False, float('inf'), TOLERANCES[name], OrderedDict(error=str(exc)))


def _run(name, function, *args):
    try:
        result = function(*args)
    except SublabError as exc:
        return _failed(name, exc)
    logger.debug('suite %s: %s (worst %.3g, tolerance %.3g)', name, 'passed' if result.passed else 'FAILED',
                  result.worst, result.tolerance)
    return result


def self_validate(christoffel_function=None):
    """
    Run every validation suite on the built-in models.

    :param christoffel_function: replacement for the Christoffel symbols in the metric compatibility suite
    :return: one result per suite, in a fixed order
    :rtype: list[SuiteResult]
    """
    models = _models()
    submersions = [model for model in models if model.is_submersion]
    results = [
        _run('jet_vs_fd', jet_vs_fd),
        _run('metric_compatibility', metric_compatibility, models, christoffel_function),
        _run('bianchi', bianchi, models),
        _run('ricci_symmetry', ricci_symmetry, models),
        _run('frame_independence', frame_independence, models),
        _run('laplacian_split', _submersion_suite, 'laplacian_split', lambda jets: laplacian_split(jets).residual,
             submersions),
        _run('tension_reduction', _submersion_suite, 'tension_reduction', tension_reduction_residual, submersions),
        _run('curvature_term', _submersion_suite, 'curvature_term', curvature_term_residual, submersions,
             _curved_base),
        _run('einstein_constants', einstein_constants, models),
        _run('divergence_relation', _submersion_suite, 'divergence_relation', _divergence_relation, submersions),
        _run('vertical_vanishing', _submersion_suite, 'vertical_vanishing', vertical_derivative, submersions),
    ]
    try:
        classifications = _classifications(models)
    except SublabError as exc:
        results.append(_failed('harmonic_implies_biharmonic', exc))
        results.append(_failed('sign_resolution', exc))
    else:
        results.append(_run('harmonic_implies_biharmonic', harmonic_implies_biharmonic, classifications))
        results.append(_run('sign_resolution', sign_resolution, classifications))
    return results


def validation_passed(results):
    """
    Whether every suite passed.

    >>> validation_passed([SuiteResult('bianchi', True, 0.0, 1e-9, {})])
    True
    """
    return all(result.passed for result in results)
