#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Registry of built-in models.

Each builder is a function whose keyword arguments are the model parameters, with their defaults.
"""
import inspect
import logging
from collections import OrderedDict

from .models.product import product
from .models.inversion import inversion
from .models.warped import loubeau_ou, warped_custom, warped_sphere
from .models.hopf import hopf, berger
from .models.flag import flag_local
from .models.spheres import cp1_round, s2_round, su2_round

from ..exceptions import ModelBuildError

logger = logging.getLogger(__name__)


def registry_builder():
    """
    Default registry of model builders.

    :return: model id to builder
    :rtype: OrderedDict
    """
    registry = OrderedDict()
    for builder in (product, inversion, loubeau_ou, warped_custom, warped_sphere, hopf, berger, flag_local, cp1_round,
                    s2_round, su2_round):
        registry[builder.__name__] = builder
    return registry


MODELS = registry_builder()


def model_parameters(model_id):
    """
    Parameters of a model with their defaults.

    >>> model_parameters('loubeau_ou')['c1']
    1.0

    :rtype: OrderedDict
    """
    try:
        builder = MODELS[model_id]
    except KeyError:
        raise ModelBuildError('unknown model %r, expected one of %s' % (model_id, ', '.join(MODELS)))
    return OrderedDict((name, parameter.default)
                       for name, parameter in inspect.signature(builder).parameters.items())


def _coerce(model_id, name, value, default):
    try:
        if isinstance(default, bool):
            if isinstance(value, str):
                return value.strip().lower() in ('1', 'true', 'yes', 'on')
            return bool(value)
        if isinstance(default, int):
            number = float(value)
            if not number.is_integer():
                raise ValueError('not an integer')
            return int(number)
        if isinstance(default, float):
            return float(value)
        return str(value)
    except (TypeError, ValueError) as exc:
        raise ModelBuildError('invalid value %r for parameter %s of model %s: %s' % (value, name, model_id, exc))


def resolve_parameters(model_id, params=None):
    """
    Parameters of a model, defaults overridden by params and coerced to the type of their default.

    >>> resolve_parameters('inversion', {'n': '3'})['n']
    3

    :rtype: OrderedDict
    """
    resolved = model_parameters(model_id)
    for name, value in (params or {}).items():
        if name not in resolved:
            raise ModelBuildError('unknown parameter %r for model %s, expected one of %s'
                                  % (name, model_id, ', '.join(resolved) or 'none'))
        resolved[name] = _coerce(model_id, name, value, resolved[name])
    return resolved


def build_model(model_id, params=None):
    """
    Build a registered model.

    :param model_id: model id, see :data:`MODELS`
    :param params: parameter values, as values or texts
    :type params: dict
    :return: the model, named after its id
    :rtype: sublab.maps.SmoothMap
    """
    resolved = resolve_parameters(model_id, params)
    logger.debug('building model %s with %s', model_id, dict(resolved))
    model = MODELS[model_id](**resolved)
    model.name = model_id
    model.params = dict(resolved)
    return model
