#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Scalar expression language: parser, syntax tree, jet evaluator and finite difference oracle.
"""
from .nodes import Node, Number, Variable, Constant, UnaryOp, BinaryOp, Call, Comparison, free_names
from .lexer import tokenize, tokenizer
from .parser import parse_expr, parse_constraint, BUILTIN_CONSTANTS
from .evaluator import evaluate, eval_expr_jet, to_string
from .fdcheck import fd_check, relative_error, DEFAULT_STEPS
