#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Run configuration: a TOML document, command line values, or both (command line values win).

Document layout::

    [model]            # or [inline], never both
    id = "loubeau_ou"
    [model.params]
    c1 = 1.0

    [sampling]
    points = 100
    seed = 0

    [tolerances]
    harmonic = 1e-7
    biharmonic = 1e-7
    match = 1e-6

    [einstein]         # optional, overrides the model's own data
    c = 0.5
    lambda1 = 1.0
    strict = true

    [output]
    path = "report.json"
    format = "json"
    timestamp = true
"""
import logging
import re
from dataclasses import dataclass, field, replace

try:
    import tomllib
except ImportError:  # pragma: no cover
    import tomli as tomllib

from ..geometry import Chart, MetricField
from ..maps import SmoothMap
from ..submersion import RiemannianSubmersion, EinsteinData, Tolerances
from ..zoo import build_model
from ..exceptions import ConfigError, ModelBuildError, SublabError

logger = logging.getLogger(__name__)

FORMATS = ('json', 'csv')

SECTIONS = {
    'model': {'id', 'params'},
    'inline': {'kind', 'domain', 'codomain', 'components', 'consts'},
    'sampling': {'points', 'seed'},
    'tolerances': {'harmonic', 'biharmonic', 'match'},
    'einstein': {'c', 'lambda1', 'strict'},
    'output': {'path', 'format', 'timestamp'},
}

_POSITION = re.compile(r'line (\d+), column (\d+)')


@dataclass(frozen=True)
class RunConfig:  # pylint:disable=too-many-instance-attributes
    """
    Everything a run needs. Exactly one of model and inline is set.
    """
    model: str = None
    params: dict = field(default_factory=dict)
    inline: dict = None
    points: int = 100
    seed: int = 0
    tolerances: Tolerances = field(default_factory=Tolerances)
    einstein: EinsteinData = None
    output: str = None
    format: str = 'json'
    timestamp: bool = True

    def __post_init__(self):
        if (self.model is None) == (self.inline is None):
            raise ConfigError('select exactly one of a zoo model and an inline definition')
        if not isinstance(self.points, int) or isinstance(self.points, bool) or self.points < 1:
            raise ConfigError('number of points must be a positive integer, got %r' % (self.points,))
        if not isinstance(self.seed, int) or isinstance(self.seed, bool) or self.seed < 0:
            raise ConfigError('seed must be a non negative integer, got %r' % (self.seed,))
        if self.format not in FORMATS:
            raise ConfigError('format must be one of %s, got %r' % (', '.join(FORMATS), self.format))

    def build(self):
        """
        Build the selected model, with the configured Einstein data when given.

        :rtype: sublab.maps.SmoothMap
        """
        model = build_model(self.model, self.params) if self.model is not None else inline_model(self.inline)
        if self.einstein is not None:
            model.einstein = self.einstein
        return model


def _section(data, name):
    section = data.get(name, {})
    if not isinstance(section, dict):
        raise ConfigError('[%s] must be a table' % name)
    unknown = set(section) - SECTIONS[name]
    if unknown:
        raise ConfigError('unknown keys in [%s]: %s' % (name, ', '.join(sorted(unknown))))
    return section


def config_from_dict(data):
    """
    Run configuration from a parsed TOML document.

    :rtype: RunConfig
    """
    unknown = set(data) - set(SECTIONS)
    if unknown:
        raise ConfigError('unknown sections: %s' % ', '.join('[%s]' % name for name in sorted(unknown)))
    model = _section(data, 'model')
    sampling = _section(data, 'sampling')
    output = _section(data, 'output')
    kwargs = {}
    if model:
        if 'id' not in model:
            raise ConfigError('[model] needs an id')
        kwargs['model'] = model['id']
        kwargs['params'] = dict(model.get('params', {}))
    if 'inline' in data:
        kwargs['inline'] = _section(data, 'inline')
    if 'points' in sampling:
        kwargs['points'] = sampling['points']
    if 'seed' in sampling:
        kwargs['seed'] = sampling['seed']
    if 'tolerances' in data:
        kwargs['tolerances'] = Tolerances(**_section(data, 'tolerances'))
    if 'einstein' in data:
        einstein = _section(data, 'einstein')
        if 'c' not in einstein:
            raise ConfigError('[einstein] needs the constant c')
        try:
            kwargs['einstein'] = EinsteinData(**einstein)
        except (ModelBuildError, TypeError) as exc:
            raise ConfigError('[einstein]: %s' % exc)
    for key, name in (('path', 'output'), ('format', 'format'), ('timestamp', 'timestamp')):
        if key in output:
            kwargs[name] = output[key]
    return RunConfig(**kwargs)


def load_config(path):
    """
    Run configuration from a TOML file.

    :raise ConfigError: with line and column on syntax errors
    :rtype: RunConfig
    """
    try:
        with open(path, 'rb') as stream:
            data = tomllib.load(stream)
    except OSError as exc:
        raise ConfigError('cannot read configuration %s: %s' % (path, exc))
    except tomllib.TOMLDecodeError as exc:
        position = _POSITION.search(str(exc))
        line, column = (int(position.group(1)), int(position.group(2))) if position else (None, None)
        raise ConfigError('invalid TOML in %s: %s' % (path, str(exc).split(' (at')[0]), line, column)
    logger.debug('loaded configuration %s', path)
    return config_from_dict(data)


def config_from_options(options):
    """
    Run configuration from command line options, on top of the ``--config`` file when given.

    :param options: parsed options
    :type options: dict
    :rtype: RunConfig
    """
    config = load_config(options['config']) if options.get('config') else None
    changes = {}
    if options.get('model'):
        changes.update(model=options['model'], inline=None)
        if config is None or config.model != options['model']:
            changes['params'] = {}
    if options.get('param'):
        params = dict(changes.get('params', config.params if config is not None else {}))
        for item in options['param']:
            name, separator, value = item.partition('=')
            if not separator or not name.strip():
                raise ConfigError('parameters are given as name=value, got %r' % item)
            params[name.strip()] = value.strip()
        changes['params'] = params
    for key in ('points', 'seed', 'output', 'format'):
        if options.get(key) is not None:
            changes[key] = options[key]
    if options.get('no_timestamp'):
        changes['timestamp'] = False
    tolerances = config.tolerances if config is not None else Tolerances()
    if options.get('tol_h') is not None:
        tolerances = replace(tolerances, harmonic=options['tol_h'])
    if options.get('tol_b') is not None:
        tolerances = replace(tolerances, biharmonic=options['tol_b'])
    changes['tolerances'] = tolerances
    if config is None:
        if not options.get('model'):
            raise ConfigError('select a model with --model or --config')
        return RunConfig(**changes)
    return replace(config, **changes)


def _chart(section, name, consts):
    for key in ('coords', 'bounds', 'metric'):
        if key not in section:
            raise ModelBuildError('[inline.%s] needs %s' % (name, key))
    chart = Chart(section['coords'], section['bounds'], section.get('constraints', ()), consts)
    return MetricField(section['metric'], chart, consts)


def inline_model(section):
    """
    Map or submersion from an ``[inline]`` table.

    Keys: ``kind`` (``"map"`` or ``"submersion"``), ``components`` (one expression per codomain coordinate),
    ``consts`` (name to value table) and the ``domain`` and ``codomain`` tables with ``coords``, ``bounds``,
    ``metric`` (expression matrix) and optional ``constraints``.

    :rtype: sublab.maps.SmoothMap
    """
    kind = section.get('kind', 'submersion')
    if kind not in ('map', 'submersion'):
        raise ModelBuildError('inline kind must be map or submersion, got %r' % (kind,))
    if 'components' not in section:
        raise ModelBuildError('inline definition needs components')
    consts = dict(section.get('consts', {}))
    try:
        domain = _chart(section.get('domain', {}), 'domain', consts)
        codomain = _chart(section.get('codomain', {}), 'codomain', consts)
        cls = RiemannianSubmersion if kind == 'submersion' else SmoothMap
        model = cls(domain, codomain, section['components'], consts=consts, name='inline')
    except ModelBuildError:
        raise
    except (SublabError, TypeError, ValueError) as exc:
        raise ModelBuildError('invalid inline definition: %s' % exc)
    logger.debug('built inline %s %r', kind, model)
    return model
