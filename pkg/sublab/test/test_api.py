#!/usr/bin/env python
# -*- coding: utf-8 -*-
# pylint: disable=no-self-use, pointless-statement, missing-docstring, invalid-name
import pytest

from ..api import build, check, SublabApi, SublabException, validate
from ..submersion import HARMONIC, PROPER_BIHARMONIC
from ..zoo.models.product import product
from ..exceptions import ModelBuildError, ConfigError


def test_build():
    model = build('berger', {'eps': '2'})
    assert model.name == 'berger'
    assert model.params == {'eps': 2.0}


def test_check_string():
    report = check('-m loubeau_ou -n 3 --no-timestamp')
    assert report.verdict == PROPER_BIHARMONIC
    assert report.header['model']['params']['c1'] == 1.0


def test_check_list():
    assert check(['check', '-m', 'product', '-n', '2']).verdict == HARMONIC


def test_check_dict():
    assert check({'model': 'product', 'points': 2, 'no_timestamp': True}).verdict == HARMONIC


def test_check_errors():
    with pytest.raises(ModelBuildError):
        check('-m klein_bottle')
    with pytest.raises(ConfigError):
        check(None)


def test_custom_registry():
    api = SublabApi({'flat': product})
    model = api.build('flat', {'size': 2.0})
    assert model.name == 'flat'
    assert model.domain.bounds[0].tolist() == [-2.0, 2.0]


def test_exception():
    with pytest.raises(SublabException) as excinfo:
        SublabApi({'flat': product}).build('flat', {'width': 2.0})
    assert "An internal error has occured in sublab" in str(excinfo.value)
    assert "Sublab Exception Report" in str(excinfo.value)
    assert excinfo.value.model == 'flat'


def test_validate_exception():
    def broken(g, ginv):
        raise ZeroDivisionError('broken connection')

    with pytest.raises(SublabException) as excinfo:
        validate(broken)
    assert 'broken connection' in str(excinfo.value)
