#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Tokenizer of the expression language, built on rebulk patterns.

>>> [token.text for token in tokenize('2*x1^-1.5e-3')]
['2', '*', 'x1', '^', '-', '1.5e-3', '']
"""
from collections import namedtuple

from rebulk import Rebulk
from rebulk.remodule import re

from ..exceptions import ParseError

Token = namedtuple('Token', ['kind', 'text', 'span'])

NUMBER = 'number'
NAME = 'name'
OPERATOR = 'operator'
COMPARISON = 'comparison'
END = 'end'


def tokenizer():
    """
    Builder for rebulk object.
    :return: Created Rebulk object
    :rtype: Rebulk
    """
    rebulk = Rebulk()
    rebulk.regex(r'(?<![A-Za-z0-9_.])[0-9.]+(?:[eE][-+]?[0-9]*)?', name=NUMBER)
    rebulk.regex(r'(?<![0-9.])[A-Za-z_][A-Za-z0-9_]*', name=NAME)
    rebulk.regex(r'\*\*', name=OPERATOR)
    rebulk.regex(r'[-+*/^(),]', name=OPERATOR)
    rebulk.regex(r'[<>]=?', name=COMPARISON)
    return rebulk


_TOKENIZER = tokenizer()


def tokenize(text):
    """
    Split text into tokens, ending with an END token located at the end of input.

    :param text: expression source
    :type text: str
    :return: tokens
    :rtype: list[Token]
    :raises ParseError: on characters that belong to no token, or on malformed numbers
    """
    if not isinstance(text, str):
        raise ParseError((0, 0), 'expression must be a string, got %r' % (text,), str(text))
    matches = _TOKENIZER.matches(text)
    for hole in matches.holes(0, len(text)):
        stripped = hole.value.lstrip()
        if stripped:
            position = hole.start + len(hole.value) - len(stripped)
            raise ParseError((position, position + 1), 'unexpected character %r' % stripped[0], text)
    tokens = []
    end = -1
    for match in sorted(matches, key=lambda m: (m.start, -len(m.value))):
        if match.start < end:
            continue
        if match.name == NUMBER:
            try:
                number = float(match.value)
            except ValueError:
                raise ParseError(match.span, 'malformed number %r' % match.value, text)
            if number == float('inf'):
                raise ParseError(match.span, 'number out of range %r' % match.value, text)
        tokens.append(Token(match.name, match.value, (match.start, match.end)))
        end = match.end
    tokens.append(Token(END, '', (len(text), len(text))))
    return tokens


_NUMBER_RE = re.compile(r'^[0-9.]+(?:[eE][-+]?[0-9]+)?$')


def is_plain_number(text):
    """
    Whether text is a single unsigned number literal.

    >>> is_plain_number('1.5e-3'), is_plain_number('x')
    (True, False)
    """
    return bool(_NUMBER_RE.match(text.strip()))
