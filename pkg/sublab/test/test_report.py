#!/usr/bin/env python
# -*- coding: utf-8 -*-
# pylint: disable=no-self-use, pointless-statement, missing-docstring, invalid-name
import json
import os

import pytest

from ..geometry import christoffel_symbols
from ..report import (RunConfig, config_from_dict, load_config, config_from_options, inline_model, build_report,
                      run_check, format_report, emit_report, load_report, recheck_report, self_validate,
                      validation_passed, TOLERANCES)
from ..report.validate import metric_compatibility, jet_vs_fd
from ..submersion import ClassificationReport, Tolerances, HARMONIC, PROPER_BIHARMONIC
from ..zoo import build_model
from ..exceptions import ConfigError, ModelBuildError

__location__ = os.path.realpath(os.path.join(os.getcwd(), os.path.dirname(__file__)))

INLINE = """
[inline]
kind = "map"
components = ["x", "y"]

[inline.domain]
coords = ["x", "y"]
bounds = [[0.0, 1.0], [0.0, 1.0]]
metric = [["1", "0"], ["0", "1"]]
constraints = ["x >= 5"]

[inline.codomain]
coords = ["u", "v"]
bounds = [[0.0, 1.0], [0.0, 1.0]]
metric = [["1", "0"], ["0", "1"]]

[sampling]
points = 2
"""


def write(tmp_path, text, name='run.toml'):
    path = tmp_path / name
    path.write_text(text, encoding='utf-8')
    return str(path)


def test_load_config(tmp_path):
    config = load_config(write(tmp_path, """
[model]
id = "loubeau_ou"
[model.params]
c1 = 2.0

[sampling]
points = 5
seed = 3

[tolerances]
harmonic = 1e-6

[output]
format = "csv"
timestamp = false
"""))
    assert config.model == 'loubeau_ou'
    assert config.params == {'c1': 2.0}
    assert (config.points, config.seed) == (5, 3)
    assert config.tolerances == Tolerances(harmonic=1e-6)
    assert config.format == 'csv'
    assert not config.timestamp


def test_config_syntax_error(tmp_path):
    with pytest.raises(ConfigError) as excinfo:
        load_config(write(tmp_path, '[sampling]\npoints = 3\n[model\nid = "product"\n'))
    assert excinfo.value.line == 3
    assert excinfo.value.column is not None
    assert 'line 3' in str(excinfo.value)


def test_config_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / 'missing.toml'))


@pytest.mark.parametrize('data', [
    {},
    {'model': {'id': 'product'}, 'inline': {'components': ['x']}},
    {'model': {'params': {}}},
    {'model': {'id': 'product'}, 'plot': {}},
    {'model': {'id': 'product'}, 'sampling': {'points': 0}},
    {'model': {'id': 'product'}, 'sampling': {'seed': -1}},
    {'model': {'id': 'product'}, 'sampling': {'step': 1}},
    {'model': {'id': 'product'}, 'tolerances': {'harmonic': -1.0}},
    {'model': {'id': 'product'}, 'einstein': {'lambda1': 1.0}},
    {'model': {'id': 'product'}, 'einstein': {'c': 1.0, 'lambda1': 0.0}},
    {'model': {'id': 'product'}, 'output': {'format': 'xml'}},
])
def test_config_invalid(data):
    with pytest.raises(ConfigError):
        config_from_dict(data)


def test_config_from_options(tmp_path):
    path = write(tmp_path, '[model]\nid = "loubeau_ou"\n[model.params]\nc1 = 2.0\n[sampling]\npoints = 7\n')
    config = config_from_options({'config': path, 'param': ['c2=0.5'], 'seed': 4, 'tol_b': 1e-6})
    assert config.params == {'c1': 2.0, 'c2': '0.5'}
    assert (config.points, config.seed) == (7, 4)
    assert config.tolerances.biharmonic == 1e-6
    config = config_from_options({'config': path, 'model': 'product'})
    assert config.model == 'product'
    assert config.params == {}
    with pytest.raises(ConfigError):
        config_from_options({})
    with pytest.raises(ConfigError):
        config_from_options({'model': 'product', 'param': ['size']})


def test_config_einstein_override():
    config = config_from_dict({'model': {'id': 'cp1_round'}, 'einstein': {'c': 0.5, 'lambda1': 1.0}})
    assert config.build().einstein.lambda1 == 1.0


def test_inline_model():
    config = config_from_dict({'inline': {
        'components': ['x', 'y'],
        'domain': {'coords': ['x', 'y', 't'], 'bounds': [[-1, 1]] * 3,
                   'metric': [['1', '0', '0'], ['0', '1', '0'], ['0', '0', '1']]},
        'codomain': {'coords': ['x', 'y'], 'bounds': [[-1, 1]] * 2, 'metric': [['1', '0'], ['0', '1']]},
    }, 'sampling': {'points': 2}, 'output': {'timestamp': False}})
    model = config.build()
    assert model.is_submersion
    assert run_check(config).verdict == HARMONIC


def test_inline_invalid():
    with pytest.raises(ModelBuildError):
        inline_model({'kind': 'surface', 'components': ['x']})
    with pytest.raises(ModelBuildError):
        inline_model({'components': ['x'], 'domain': {'coords': ['x']}})


def test_run_check_product():
    report = run_check(RunConfig(model='product', points=3, timestamp=False))
    assert report.verdict == HARMONIC
    assert len(report.records) == 3
    assert report.header['model']['model'] == 'product'
    assert report.header['sign_tally']['both'] == 3
    assert 'timestamp' not in report.header


def test_report_timestamp():
    report = run_check(RunConfig(model='product', points=1))
    assert report.header['timestamp'].endswith('+00:00')


def test_report_reproducible():
    config = RunConfig(model='loubeau_ou', points=3, seed=5, timestamp=False)
    assert format_report(run_check(config)) == format_report(run_check(config))


def test_report_findings():
    report = run_check(RunConfig(model='cp1_round', points=2, timestamp=False))
    assert report.verdict == HARMONIC
    assert report.findings['obata']['eigres_lambda1'] <= 1e-8
    assert report.findings['killing']['r1'] <= 1e-8


@pytest.mark.parametrize('model_id', ['hopf', 'warped_sphere'])
def test_report_base_findings(model_id):
    report = run_check(RunConfig(model=model_id, points=3, timestamp=False))
    assert report.findings['obata']['function'] == 'cos(theta)'
    assert report.findings['obata']['eigres_lambda1'] <= 1e-8
    assert report.findings['obata']['base'] <= 1e-8
    assert report.findings['killing']['r1'] <= 1e-8
    assert report.findings['killing']['field'] == ['0', '1']


def test_report_no_findings():
    assert run_check(RunConfig(model='loubeau_ou', points=2, timestamp=False)).findings == {}


def test_emit_json(tmp_path):
    report = run_check(RunConfig(model='loubeau_ou', points=3, timestamp=False))
    path = emit_report(report, str(tmp_path / 'report.json'))
    with open(path, 'r', encoding='utf-8') as stream:
        data = json.load(stream)
    assert data['verdict'] == PROPER_BIHARMONIC
    assert len(data['records']) == 3
    assert all(record['horizontal_gradient'] > 1e-3 for record in data['records'])
    loaded, stored = load_report(path)
    assert stored == PROPER_BIHARMONIC
    assert loaded.verdict == stored
    assert recheck_report(path) == (PROPER_BIHARMONIC, PROPER_BIHARMONIC)
    assert not [name for name in os.listdir(str(tmp_path)) if name.endswith('.tmp')]


def test_recheck_tampered(tmp_path):
    report = run_check(RunConfig(model='product', points=2, timestamp=False))
    data = json.loads(format_report(report))
    data['verdict'] = 'NEITHER'
    path = tmp_path / 'report.json'
    path.write_text(json.dumps(data), encoding='utf-8')
    assert recheck_report(str(path)) == (HARMONIC, 'NEITHER')


def test_emit_csv(tmp_path):
    report = run_check(RunConfig(model='hopf', points=4, timestamp=False))
    path = emit_report(report, str(tmp_path / 'report.csv'), 'csv')
    with open(path, 'r', encoding='utf-8') as stream:
        lines = stream.read().splitlines()
    assert len(lines) == 5
    assert lines[0].split(',')[:4] == ['index', 'eta', 'xi1', 'xi2']
    assert lines[0].split(',')[-3:] == ['horizontal_gradient', 'r1', 'r2']
    assert lines[1].startswith('0,')


def test_empty_report():
    classification = ClassificationReport(build_model('product').describe(), 0, 0, Tolerances())
    report = build_report(classification, timestamp=False)
    assert report.verdict is None
    assert report.as_dict()['records'] == []
    assert format_report(report, 'csv').count('\n') == 1


def test_jet_vs_fd():
    result = jet_vs_fd()
    assert result.passed
    assert result.worst <= TOLERANCES['jet_vs_fd']


def test_metric_compatibility_control():
    def flipped(g, ginv):
        return -christoffel_symbols(g, ginv)

    models = [build_model('hopf')]
    assert metric_compatibility(models).passed
    result = metric_compatibility(models, flipped)
    assert not result.passed
    assert result.worst > 1e-3


def test_self_validate():
    results = self_validate()
    assert [result.name for result in results] == list(TOLERANCES)
    assert validation_passed(results), [result for result in results if not result.passed]
    resolution = results[-1].detail['resolution']
    assert resolution in ('plus', 'minus')
