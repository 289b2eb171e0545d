#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Harmonic and biharmonic classification of a map over a seeded sample of domain points.
"""
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, asdict, fields

import numpy as np

from .einstein import einstein_residuals_at, check_einstein
from .reduced import (reduced_bitension, bitension_match, tension_reduction_residual, curvature_term_residual,
                      laplacian_split, fibre_variation, vertical_derivative, horizontal_gradient,
                      divergence)
from ..geometry import check_positive_definite
from ..maps import MapJets, normalized
from ..exceptions import SublabError, SamplingError, ConfigError, EinsteinCheckError, ModelBuildError

logger = logging.getLogger(__name__)

HARMONIC = 'HARMONIC'
PROPER_BIHARMONIC = 'PROPER_BIHARMONIC'
NEITHER = 'NEITHER'

#: tally categories of the sign comparison
SIGN_CATEGORIES = ('plus', 'minus', 'both', 'neither', 'inapplicable')

#: sampling gives up after this many attempts per requested point
ATTEMPTS_PER_POINT = 100


@dataclass(frozen=True)
class Tolerances:
    """
    Tolerances on normalized residuals.

    :param harmonic: largest tension of a harmonic map
    :param biharmonic: largest bitension of a biharmonic map
    :param match: largest distance of a reduced bitension variant to the definition-level one
    """
    harmonic: float = 1e-7
    biharmonic: float = 1e-7
    match: float = 1e-6

    def __post_init__(self):
        for item in fields(self):
            value = getattr(self, item.name)
            if not (isinstance(value, (int, float)) and np.isfinite(value) and value > 0):
                raise ConfigError('tolerance %s must be a positive number, got %r' % (item.name, value))


@dataclass
class PointRecord:  # pylint:disable=too-many-instance-attributes
    """
    Residuals at one sampled point. Submersion and Einstein entries are None when they do not apply.
    """
    index: int
    point: list
    tension: float
    bitension_general: float
    energy: float
    bienergy: float
    tension_reduction: float = None
    bitension_reduced_plus: float = None
    bitension_reduced_minus: float = None
    match_plus: float = None
    match_minus: float = None
    curvature_term: float = None
    laplacian_split: float = None
    div_x: float = None
    div_tension: float = None
    div_relation: float = None
    horizontal_remainder: float = None
    fibre_variation: float = None
    vertical_derivative: float = None
    horizontal_gradient: float = None
    sign: str = None
    r1: float = None
    r2: float = None
    einstein_base: float = None

    def as_dict(self):  # pylint:disable=missing-docstring
        return asdict(self)


@dataclass
class ClassificationReport:
    """
    Records of a classification run, with the verdict and the sign tally derived from them.
    """
    model: dict
    seed: int
    points: int
    tolerances: Tolerances
    records: list = field(default_factory=list)
    attempts: int = 0

    @property
    def verdict(self):  # pylint:disable=missing-docstring
        return derive_verdict(self.records, self.tolerances)

    @property
    def sign_tally(self):  # pylint:disable=missing-docstring
        return tally_signs(self.records)

    @property
    def sign_resolution(self):  # pylint:disable=missing-docstring
        return resolve_sign(self.sign_tally)

    def maxima(self):
        """
        Largest value of every numeric record entry.

        :rtype: dict
        """
        ret = {}
        for item in fields(PointRecord):
            if item.name in ('index', 'point', 'sign'):
                continue
            values = [getattr(record, item.name) for record in self.records]
            values = [value for value in values if value is not None]
            if values:
                ret[item.name] = max(values)
        return ret


def _get(record, name):
    return record[name] if isinstance(record, dict) else getattr(record, name)


def derive_verdict(records, tolerances):
    """
    HARMONIC when every tension is within tolerance, PROPER_BIHARMONIC when every bitension is, NEITHER otherwise.

    >>> derive_verdict([{'tension': 0.5, 'bitension_general': 1e-9}], Tolerances())
    'PROPER_BIHARMONIC'

    :param records: point records or their dicts
    :return: the verdict, None without records
    """
    if not records:
        return None
    if max(_get(record, 'tension') for record in records) <= tolerances.harmonic:
        return HARMONIC
    if max(_get(record, 'bitension_general') for record in records) <= tolerances.biharmonic:
        return PROPER_BIHARMONIC
    return NEITHER


def tally_signs(records):
    """
    Count of sign categories over the records of a submersion.

    :rtype: dict
    """
    tally = dict.fromkeys(SIGN_CATEGORIES, 0)
    for record in records:
        sign = _get(record, 'sign')
        if sign is not None:
            tally[sign] += 1
    return tally


def resolve_sign(tally):
    """
    The sign variant confirmed by the tally.

    >>> resolve_sign({'plus': 0, 'minus': 3, 'both': 2, 'neither': 0, 'inapplicable': 4})
    'minus'

    :return: ``'plus'``, ``'minus'``, ``'inconsistent'`` or ``'undetermined'``
    """
    if tally.get('neither') or (tally.get('plus') and tally.get('minus')):
        return 'inconsistent'
    for sign in ('plus', 'minus'):
        if tally.get(sign):
            return sign
    return 'undetermined'


def _sign_category(match, variation, tolerances):
    if variation > tolerances.biharmonic:
        return 'inapplicable'
    plus = match['plus'] <= tolerances.match
    minus = match['minus'] <= tolerances.match
    if plus and minus:
        return 'both'
    if plus:
        return 'plus'
    if minus:
        return 'minus'
    return 'neither'


def evaluate_point(model, index, point, tolerances=None):
    """
    Record of every applicable residual at a point.

    :param model: map or submersion
    :type model: sublab.maps.SmoothMap
    :rtype: PointRecord
    """
    tolerances = tolerances or Tolerances()
    jets = model.jets(point) if model.is_submersion else MapJets(model, point)
    tension = jets.tension
    bitension = jets.bitension
    densities = jets.energy_densities
    record = PointRecord(index=index, point=[float(value) for value in jets.point], tension=tension.normalized,
                         bitension_general=bitension.normalized, energy=densities.energy,
                         bienergy=densities.bienergy)
    if not model.is_submersion:
        if model.einstein is not None:
            record.einstein_base = check_einstein(jets.codomain, model.einstein)
        return record
    reduced = reduced_bitension(jets)
    match = bitension_match(jets, reduced)
    record.bitension_reduced_plus = normalized(jets.h_norm(reduced.plus), [reduced.scale])
    record.bitension_reduced_minus = normalized(jets.h_norm(reduced.minus), [reduced.scale])
    record.match_plus = match['plus']
    record.match_minus = match['minus']
    record.tension_reduction = tension_reduction_residual(jets)
    record.curvature_term = curvature_term_residual(jets)
    record.laplacian_split = laplacian_split(jets).residual
    div = divergence(jets)
    record.div_x = div.div_x
    record.div_tension = div.div_tension
    record.div_relation = div.relation
    record.horizontal_remainder = jets.structure_coefficients.horizontal_remainder
    record.fibre_variation = fibre_variation(jets)
    record.vertical_derivative = vertical_derivative(jets)
    record.horizontal_gradient = horizontal_gradient(jets)
    record.sign = _sign_category(match, record.fibre_variation, tolerances)
    if model.einstein is not None:
        einstein = einstein_residuals_at(jets, model.einstein)
        record.r1, record.r2, record.einstein_base = einstein.r1, einstein.r2, einstein.base
    return record


def admissible(model, point):
    """
    Whether a sampled point can be evaluated: in the domain, both metrics positive-definite and dpi of full rank.

    :rtype: bool
    """
    if not model.domain.contains(point):
        logger.debug('rejected %s: outside of the domain', point.tolist())
        return False
    try:
        check_positive_definite(model.domain_metric.value_at(point), point)
        x = model.domain.lift(point, order=1)
        phi = model.evaluate(x)
        check_positive_definite(model.codomain_metric.value_at(phi.value), phi.value)
        differential = np.asarray(phi.gradient().value)
        if np.linalg.matrix_rank(differential) < min(differential.shape):
            logger.debug('rejected %s: rank deficient differential', point.tolist())
            return False
    except SublabError as exc:
        logger.debug('rejected %s: %s', point.tolist(), exc)
        return False
    return True


def worker_count():
    """
    Worker threads of the classifier, from ``SUBLAB_THREADS`` or ``min(8, cpu count)``.

    :rtype: int
    """
    value = os.environ.get('SUBLAB_THREADS')
    if value is None:
        return min(8, os.cpu_count() or 1)
    try:
        count = int(value)
    except ValueError:
        raise ConfigError('SUBLAB_THREADS must be a positive integer, got %r' % value)
    if count < 1:
        raise ConfigError('SUBLAB_THREADS must be a positive integer, got %r' % value)
    return count


def _safe_evaluate(model, point, tolerances):
    try:
        return evaluate_point(model, -1, point, tolerances)
    except SublabError as exc:
        return exc


def classify(model, points=100, seed=0, tolerances=None, threads=None):
    """
    Classify a map from a seeded sample of its domain.

    Points are drawn uniformly in the domain box and rejected when not admissible; points whose evaluation fails are
    replaced by further draws. Records are numbered in draw order, so the report only depends on the seed.

    :param model: map or submersion
    :param points: number of points N
    :param seed: seed of the random generator
    :type tolerances: Tolerances
    :param threads: worker threads, :func:`worker_count` by default
    :raise SamplingError: when N points are not found in ``100 N`` attempts
    :raise EinsteinCheckError: when strict Einstein data does not hold on the codomain
    :rtype: ClassificationReport
    """
    if points < 1:
        raise ConfigError('number of points must be at least 1, got %r' % (points,))
    tolerances = tolerances or Tolerances()
    rng = np.random.default_rng(seed)
    report = ClassificationReport(model.describe(), seed, points, tolerances)
    limit = ATTEMPTS_PER_POINT * points
    threads = threads or worker_count()
    with ThreadPoolExecutor(max_workers=threads) as executor:
        while len(report.records) < points:
            batch = []
            while len(batch) < points - len(report.records):
                if report.attempts >= limit:
                    raise SamplingError('found %d valid points out of %d in %d attempts'
                                        % (len(report.records) + len(batch), points, report.attempts),
                                        attempts=report.attempts, accepted=len(report.records) + len(batch))
                report.attempts += 1
                candidate = model.domain.sample(rng)
                if admissible(model, candidate):
                    batch.append(candidate)
            results = executor.map(lambda candidate: _safe_evaluate(model, candidate, tolerances), batch)
            for candidate, result in zip(batch, results):
                if isinstance(result, (EinsteinCheckError, ModelBuildError)):
                    raise result
                if isinstance(result, SublabError):
                    logger.warning('evaluation failed at %s: %s', candidate.tolist(), result)
                    continue
                result.index = len(report.records)
                report.records.append(result)
    logger.debug('classified %s on %d points in %d attempts: %s', model, points, report.attempts, report.verdict)
    return report
