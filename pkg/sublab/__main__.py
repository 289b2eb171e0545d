#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Entry point module
"""
# pragma: no cover
import json
import logging
import sys
import traceback
from collections import OrderedDict

import numpy as np

from .__version__ import __version__
from .exceptions import (SublabError, ConfigError, ModelBuildError, EinsteinCheckError, SamplingError,
                         InvalidPointError)
from .jsonutils import SublabEncoder
from .maps import MapJets
from .options import argument_parser
from .report import (config_from_options, run_check, format_report, emit_report, write_atomic, recheck_report,
                     self_validate, validation_passed, draw_points)
from .submersion import reduced_tension, reduced_bitension
from .zoo import MODELS, model_parameters

logger = logging.getLogger(__name__)

#: exit codes
OK = 0
UNEXPECTED_ERROR = 1
CONFIG_ERROR = 2
MODEL_ERROR = 3
SAMPLING_ERROR = 4
VALIDATION_FAILED = 5


def _write(text, path=None):
    if path:
        write_atomic(path, text)
    else:
        sys.stdout.write(text)


def _dump(data, path=None):
    _write(json.dumps(data, cls=SublabEncoder, indent=2) + '\n', path)


def check(options):
    """
    Classify the selected model and write its report.
    """
    config = config_from_options(options)
    report = run_check(config)
    if config.output:
        emit_report(report, config.output, config.format)
    else:
        _write(format_report(report, config.format))
    return OK


def fields(options, bitension=False):
    """
    Tension, or bitension, of the selected model at the given or sampled points.
    """
    config = config_from_options(options)
    model = config.build()
    points = options.get('at') or draw_points(model, config.points, config.seed)
    records = []
    for point in points:
        point = np.asarray(point, dtype=float)
        if point.size != model.domain.dim or not model.domain.contains(point):
            raise InvalidPointError('point %s is not in the domain of %s' % (point.tolist(), model.domain))
        jets = model.jets(point) if model.is_submersion else MapJets(model, point)
        record = OrderedDict(point=point, tension=jets.tension.value, tension_norm=jets.tension.normalized)
        if model.is_submersion:
            record['tension_reduced'] = reduced_tension(jets)
        if bitension:
            record['bitension'] = jets.bitension.value
            record['bitension_norm'] = jets.bitension.normalized
            if model.is_submersion:
                reduced = reduced_bitension(jets)
                record['bitension_reduced_plus'] = reduced.plus
                record['bitension_reduced_minus'] = reduced.minus
        records.append(record)
    _dump(OrderedDict(model=model.describe(), points=records), config.output)
    return OK


def validate(options):
    """
    Run the self validation suites, failing when one of them fails.
    """
    results = self_validate()
    _dump([result._asdict() for result in results], options.get('output'))
    for result in results:
        logger.debug('%s: %s', result.name, 'passed' if result.passed else 'FAILED')
    return OK if validation_passed(results) else VALIDATION_FAILED


def recheck(options):
    """
    Derive the verdict of a report again and compare it to the stored one.
    """
    derived, stored = recheck_report(options['path'])
    print('derived=%s stored=%s' % (derived, stored))
    return OK if derived == stored else VALIDATION_FAILED


def models(options):  # pylint:disable=unused-argument
    """
    List the built-in models with their parameters.
    """
    for model_id in MODELS:
        parameters = ', '.join('%s=%r' % item for item in model_parameters(model_id).items())
        print('%s(%s)' % (model_id, parameters))
    return OK


COMMANDS = {
    'check': check,
    'tension': fields,
    'bitension': lambda options: fields(options, bitension=True),
    'validate': validate,
    'report': recheck,
    'models': models,
}


def main(args=None):
    """
    Main function for entry point

    :return: exit code
    :rtype: int
    """
    if args is None:  # pragma: no cover
        options = argument_parser.parse_args()
    else:
        options = argument_parser.parse_args(args)
    options = vars(options)
    if options.get('verbose'):
        logging.basicConfig(stream=sys.stdout, format='%(message)s')
        logging.getLogger('sublab').setLevel(logging.DEBUG)

    if options.get('version'):
        print('sublab ' + __version__)
        return OK
    if not options.get('command'):
        argument_parser.print_help()
        return CONFIG_ERROR

    try:
        return COMMANDS[options['command']](options)
    except (ConfigError, InvalidPointError) as exc:
        print('configuration error: %s' % exc, file=sys.stderr)
        return CONFIG_ERROR
    except (ModelBuildError, EinsteinCheckError) as exc:
        print('model error: %s' % exc, file=sys.stderr)
        return MODEL_ERROR
    except SamplingError as exc:
        print('sampling error: %s' % exc, file=sys.stderr)
        return SAMPLING_ERROR
    except SublabError as exc:
        print('error: %s' % exc, file=sys.stderr)
        return UNEXPECTED_ERROR
    except Exception:  # pylint:disable=broad-except
        traceback.print_exc()
        return UNEXPECTED_ERROR


if __name__ == '__main__':  # pragma: no cover
    sys.exit(main())
