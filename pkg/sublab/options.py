#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Options
"""
import shlex
from argparse import ArgumentParser, ArgumentTypeError

from .report import FORMATS

COMMANDS = ('check', 'tension', 'bitension', 'validate', 'report', 'models')


def point_type(text):
    """
    Point coordinates given as comma separated numbers.

    >>> point_type('0.5, 1,-2e-1')
    [0.5, 1.0, -0.2]
    """
    try:
        return [float(item) for item in text.split(',')]
    except ValueError:
        raise ArgumentTypeError('point coordinates are comma separated numbers, got %r' % text)


def _model_options(parser):
    model_opts = parser.add_argument_group("Model")
    model_opts.add_argument('-m', '--model', dest='model', default=None,
                            help='Built-in model id (see the models command).')
    model_opts.add_argument('-p', '--param', dest='param', action='append', default=None,
                            help='Model parameter as name=value (can be used multiple times)')
    model_opts.add_argument('-c', '--config', dest='config', default=None,
                            help='TOML run configuration. Command line values override its values.')

    sampling_opts = parser.add_argument_group("Sampling")
    sampling_opts.add_argument('-n', '--points', dest='points', type=int, default=None,
                               help='Number of sampled points (default: 100)')
    sampling_opts.add_argument('-s', '--seed', dest='seed', type=int, default=None,
                               help='Seed of the sampler (default: 0)')
    sampling_opts.add_argument('--tol-h', dest='tol_h', type=float, default=None,
                               help='Tolerance on the normalized tension of harmonic maps (default: 1e-7)')
    sampling_opts.add_argument('--tol-b', dest='tol_b', type=float, default=None,
                               help='Tolerance on the normalized bitension of biharmonic maps (default: 1e-7)')
    return model_opts


def _output_options(parser):
    output_opts = parser.add_argument_group("Output")
    output_opts.add_argument('-o', '--output', dest='output', default=None,
                             help='Write the output to this file instead of the standard output.')
    output_opts.add_argument('-f', '--format', dest='format', choices=FORMATS, default=None,
                             help='Report format (default: json)')
    output_opts.add_argument('--no-timestamp', dest='no_timestamp', action='store_true', default=False,
                             help='Leave the timestamp out of the report header.')
    output_opts.add_argument('-v', '--verbose', action='store_true', dest='verbose', default=False,
                             help='Display debug output')
    return output_opts


def build_argument_parser():
    """
    Builds the argument parser
    :return: the argument parser
    :rtype: ArgumentParser
    """
    opts = ArgumentParser(prog='sublab',
                          description='Harmonic and biharmonic checks of maps and Riemannian submersions.')
    opts.add_argument('--version', dest='version', action='store_true', default=False,
                      help='Display the sublab version.')
    commands = opts.add_subparsers(dest='command', metavar='command')

    check = commands.add_parser('check', help='Classify a model over a seeded sample of its domain.')
    _model_options(check)
    _output_options(check)

    for name, description in (('tension', 'Tension field at points.'),
                              ('bitension', 'Bitension field at points, with the reduced variants of submersions.')):
        command = commands.add_parser(name, help=description)
        model_opts = _model_options(command)
        model_opts.add_argument('-a', '--at', dest='at', action='append', type=point_type, default=None,
                                help='Point as comma separated coordinates (can be used multiple times). '
                                     'Sampled points are used when missing.')
        _output_options(command)

    validate = commands.add_parser('validate', help='Run the self validation suites on the built-in models.')
    _output_options(validate)

    report = commands.add_parser('report', help='Derive the verdict of a JSON report again from its records.')
    report.add_argument(dest='path', help='JSON report file')
    report.add_argument('-v', '--verbose', action='store_true', dest='verbose', default=False,
                        help='Display debug output')

    models = commands.add_parser('models', help='List the built-in models with their parameters.')
    models.add_argument('-v', '--verbose', action='store_true', dest='verbose', default=False,
                        help='Display debug output')

    return opts


def parse_options(options, command='check'):
    """
    Parse given options
    :param options: argument list, shell string or already parsed options
    :type options: list|str|dict
    :param command: command assumed when the arguments do not start with one
    :return: parsed options
    :rtype: dict
    """
    if options is None:
        return {}
    if isinstance(options, dict):
        return options
    if isinstance(options, str):
        options = shlex.split(options)
    args = list(options)
    if not args or args[0] not in COMMANDS:
        args.insert(0, command)
    return vars(argument_parser.parse_args(args))


argument_parser = build_argument_parser()
