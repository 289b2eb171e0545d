#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Reports: classification runs turned into self-contained JSON or CSV documents.
"""
import csv
import io
import json
import logging
import os
import tempfile
from collections import OrderedDict
from dataclasses import dataclass, field, asdict
from datetime import datetime

from dateutil import tz

from ..submersion import classify, derive_verdict, Tolerances, obata_residual, einstein_field_residuals
from ..jsonutils import SublabEncoder
from ..__version__ import __version__

logger = logging.getLogger(__name__)

CSV_COLUMNS = ('tension', 'bitension_general', 'bitension_reduced_plus', 'bitension_reduced_minus', 'div_x',
               'horizontal_gradient', 'r1', 'r2')


@dataclass
class Report:
    """
    Header, per-point records and the verdict derived from them.
    """
    header: dict
    records: list = field(default_factory=list)
    findings: dict = field(default_factory=dict)

    @property
    def verdict(self):  # pylint:disable=missing-docstring
        return derive_verdict(self.records, Tolerances(**self.header['tolerances']))

    def as_dict(self):
        """
        Document layout of the report.

        :rtype: OrderedDict
        """
        return OrderedDict([('header', self.header), ('verdict', self.verdict), ('findings', self.findings),
                            ('records', self.records)])


def _maxima(residuals):
    ret = OrderedDict()
    for residual in residuals:
        for name, value in residual._asdict().items():
            if value is not None:
                ret[name] = max(ret.get(name, value), value)
    return ret


def manifold_findings(model, points):
    """
    Eigenfunction and Killing field residuals on a manifold with Einstein data: the manifold itself for identity
    models, the base at the image points for submersions.

    Values are findings: they are reported, not checked against tolerances.

    :param points: domain points
    :return: largest residuals per check, empty for models without Einstein data
    :rtype: OrderedDict
    """
    ret = OrderedDict()
    if model.einstein is None:
        return ret
    if model.is_submersion:
        metric = model.codomain_metric
        points = [model.value_at(point) for point in points]
    else:
        metric = model.domain_metric
    eigenfunction = model.extras.get('eigenfunction')
    if eigenfunction is not None:
        ret['obata'] = _maxima(obata_residual(metric, model.einstein, eigenfunction, point) for point in points)
        ret['obata']['function'] = eigenfunction
    killing = model.extras.get('killing')
    if killing is not None:
        ret['killing'] = _maxima(einstein_field_residuals(metric, model.einstein, killing, point)
                                 for point in points)
        ret['killing']['field'] = list(killing)
    return ret


def build_report(classification, einstein=None, timestamp=True, findings=None):
    """
    Report of a classification run.

    :type classification: sublab.submersion.ClassificationReport
    :rtype: Report
    """
    header = OrderedDict()
    header['sublab'] = __version__
    header['model'] = classification.model
    header['seed'] = classification.seed
    header['points'] = classification.points
    header['attempts'] = classification.attempts
    header['tolerances'] = asdict(classification.tolerances)
    header['einstein'] = asdict(einstein) if einstein is not None else None
    header['sign_resolution'] = classification.sign_resolution
    header['sign_tally'] = classification.sign_tally
    header['maxima'] = classification.maxima()
    if timestamp:
        header['timestamp'] = datetime.now(tz.tzutc()).isoformat()
    return Report(header, [record.as_dict() for record in classification.records], findings or OrderedDict())


def run_check(config):
    """
    Build the configured model, classify it and assemble the report.

    :type config: RunConfig
    :rtype: Report
    """
    model = config.build()
    classification = classify(model, config.points, config.seed, config.tolerances)
    findings = manifold_findings(model, [record.point for record in classification.records])
    report = build_report(classification, model.einstein, config.timestamp, findings)
    logger.debug('%s: %s', model, report.verdict)
    return report


def _csv_number(value):
    return '' if value is None else '%.17g' % value


def format_report(report, fmt='json'):
    """
    Report text, JSON with every record or CSV with one row per record.

    :rtype: str
    """
    if fmt == 'csv':
        coords = report.header['model']['domain']
        stream = io.StringIO()
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(['index'] + list(coords) + list(CSV_COLUMNS))
        for record in report.records:
            writer.writerow([record['index']] + [_csv_number(value) for value in record['point']] +
                            [_csv_number(record[column]) for column in CSV_COLUMNS])
        return stream.getvalue()
    return json.dumps(report.as_dict(), cls=SublabEncoder, indent=2) + '\n'


def write_atomic(path, text):
    """
    Write text to a temporary file next to path, then rename it over path.
    """
    directory = os.path.dirname(os.path.abspath(path))
    descriptor, temporary = tempfile.mkstemp(dir=directory, prefix='.sublab-', suffix='.tmp')
    try:
        with os.fdopen(descriptor, 'w', encoding='utf-8', newline='') as stream:
            stream.write(text)
        os.replace(temporary, path)
    except BaseException:
        if os.path.exists(temporary):
            os.remove(temporary)
        raise


def emit_report(report, path, fmt='json'):
    """
    Write a report file atomically.

    :return: path
    """
    write_atomic(path, format_report(report, fmt))
    logger.debug('wrote %s report %s', fmt, path)
    return path


def load_report(path):
    """
    Report and stored verdict from a JSON file.

    :rtype: Report
    """
    with open(path, 'r', encoding='utf-8') as stream:
        data = json.load(stream, object_pairs_hook=OrderedDict)
    return Report(data['header'], data['records'], data.get('findings', OrderedDict())), data.get('verdict')


def recheck_report(path):
    """
    Derive the verdict of a JSON report from its records again.

    :return: (derived verdict, stored verdict)
    """
    report, stored = load_report(path)
    return report.verdict, stored
