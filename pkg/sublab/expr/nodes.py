#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Syntax tree of scalar expressions.

Nodes are immutable. Their span points into the parsed text and is ignored by equality, so two parses of
equivalent texts compare equal.
"""
from dataclasses import dataclass, field
from typing import Tuple


def _span():
    return field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Node(object):
    """
    Base class of expression nodes.
    """
    span = (0, 0)

    def walk(self):
        """
        Iterate over this node and all its descendants, depth first.
        """
        yield self
        for child in self.children():
            for node in child.walk():
                yield node

    def children(self):  # pylint:disable=no-self-use
        """
        Direct sub-expressions.
        """
        return ()


@dataclass(frozen=True)
class Number(Node):
    """
    Real literal.
    """
    value: float
    span: Tuple[int, int] = _span()


@dataclass(frozen=True)
class Variable(Node):
    """
    Reference to a chart coordinate, resolved to its position.
    """
    name: str
    index: int
    span: Tuple[int, int] = _span()


@dataclass(frozen=True)
class Constant(Node):
    """
    Named constant, bound at evaluation time.
    """
    name: str
    span: Tuple[int, int] = _span()


@dataclass(frozen=True)
class UnaryOp(Node):
    """
    Prefix ``-`` or ``+``.
    """
    op: str
    operand: Node
    span: Tuple[int, int] = _span()

    def children(self):
        return (self.operand,)


@dataclass(frozen=True)
class BinaryOp(Node):
    """
    ``+ - * / ^``.
    """
    op: str
    left: Node
    right: Node
    span: Tuple[int, int] = _span()

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Call(Node):
    """
    Function call.
    """
    function: str
    argument: Node
    span: Tuple[int, int] = _span()

    def children(self):
        return (self.argument,)


@dataclass(frozen=True)
class Comparison(Node):
    """
    Domain constraint ``left op right`` with op in ``< <= > >=``.
    """
    op: str
    left: Node
    right: Node
    span: Tuple[int, int] = _span()

    def children(self):
        return (self.left, self.right)


def free_names(node):
    """
    Names of the coordinates and constants an expression depends on.

    :rtype: set
    """
    return set(n.name for n in node.walk() if isinstance(n, (Variable, Constant)))
