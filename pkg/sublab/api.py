#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
API functions that can be used by external software
"""
import traceback

from .exceptions import SublabError
from .options import parse_options
from .report import config_from_options, run_check, self_validate
from .zoo import MODELS, build_model as _build_model
from .__version__ import __version__


class SublabException(Exception):
    """
    Exception raised when sublab fails on an internal error.
    """
    def __init__(self, model, options):
        super(SublabException, self).__init__("An internal error has occured in sublab.\n"
                                              "===================== Sublab Exception Report =====================\n"
                                              "version=%s\n"
                                              "model=%s\n"
                                              "options=%s\n"
                                              "-------------------------------------------------------------------\n"
                                              "%s"
                                              "-------------------------------------------------------------------\n"
                                              "===================================================================" %
                                              (__version__, str(model), str(options), traceback.format_exc()))

        self.model = model
        self.options = options


def build(model, params=None):
    """
    Builds a registered model
    :param model: model id
    :type model: str
    :param params: parameter values
    :type params: dict
    :return: the model
    :rtype: sublab.maps.SmoothMap
    """
    return default_api.build(model, params)


def check(options=None):
    """
    Classifies the model selected by options and returns its report
    :param options: command line arguments of the check command, as list, string or dict
    :type options: list|str|dict
    :rtype: sublab.report.Report
    """
    return default_api.check(options)


def validate(christoffel_function=None):
    """
    Runs the self validation suites
    :rtype: list[sublab.report.SuiteResult]
    """
    return default_api.validate(christoffel_function)


class SublabApi(object):
    """
    An api class that can be configured with a custom model registry.
    """

    def __init__(self, models=None):
        """
        :param models: model id to builder, the built-in registry by default
        :type models: dict
        """
        self.models = MODELS if models is None else models

    def build(self, model, params=None):
        """
        Builds a model of the registry
        :rtype: sublab.maps.SmoothMap
        """
        try:
            if self.models is MODELS:
                return _build_model(model, params)
            built = self.models[model](**(params or {}))
            built.name = model
            built.params = dict(params or {})
            return built
        except SublabError:
            raise
        except Exception:  # pylint:disable=broad-except
            raise SublabException(model, params)

    def check(self, options=None):
        """
        Classifies a model
        :param options: command line arguments of the check command, as list, string or dict
        :rtype: sublab.report.Report
        """
        model = None
        try:
            options = parse_options(options, 'check')
            model = options.get('model')
            config = config_from_options(options)
            return run_check(config)
        except SublabError:
            raise
        except Exception:  # pylint:disable=broad-except
            raise SublabException(model, options)

    def validate(self, christoffel_function=None):
        """
        Runs the self validation suites
        :rtype: list[sublab.report.SuiteResult]
        """
        try:
            return self_validate(christoffel_function)
        except SublabError:
            raise
        except Exception:  # pylint:disable=broad-except
            raise SublabException(None, {'christoffel_function': christoffel_function})


default_api = SublabApi()
