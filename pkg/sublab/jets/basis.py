#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Multi-index bookkeeping for truncated Taylor expansions.

Multi-indices are graded: all indices of degree 0, then degree 1, ... up to the basis order. Inside a degree they
follow ``itertools.combinations_with_replacement`` order. A basis of lower order is therefore a prefix of a basis of
higher order, and truncation is a slice.

>>> basis = get_basis(2, 2)
>>> basis.indices
((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))
>>> basis.size, basis.prefix(1)
(6, 3)
"""
import itertools
from functools import lru_cache
from math import factorial

import numpy as np


def _graded_indices(dim, order):
    indices = []
    for degree in range(order + 1):
        for combination in itertools.combinations_with_replacement(range(dim), degree):
            alpha = [0] * dim
            for variable in combination:
                alpha[variable] += 1
            indices.append(tuple(alpha))
    return tuple(indices)


class JetBasis(object):
    """
    Multi-indices of ``dim`` variables up to ``order``, with the index tables used by jet arithmetic.

    :param dim: number of independent variables
    :type dim: int
    :param order: maximal total degree
    :type order: int
    """

    def __init__(self, dim, order):
        if dim < 1:
            raise ValueError('jet dimension must be at least 1, got %r' % dim)
        if order < 0:
            raise ValueError('jet order must be non negative, got %r' % order)
        self.dim = dim
        self.order = order
        self.indices = _graded_indices(dim, order)
        self.size = len(self.indices)
        self.index_of = dict((alpha, i) for i, alpha in enumerate(self.indices))
        self.degrees = np.array([sum(alpha) for alpha in self.indices], dtype=int)
        self.factorials = np.array([np.prod([factorial(a) for a in alpha]) for alpha in self.indices], dtype=float)
        self._prefix = [int(np.searchsorted(self.degrees, degree, side='right')) for degree in range(order + 1)]
        self._build_product_table()
        self._build_diff_tables()

    def _build_product_table(self):
        triples = []
        for i, alpha in enumerate(self.indices):
            for j, beta in enumerate(self.indices):
                if self.degrees[i] + self.degrees[j] <= self.order:
                    gamma = tuple(a + b for a, b in zip(alpha, beta))
                    triples.append((self.index_of[gamma], i, j))
        triples.sort()
        out = np.array([t[0] for t in triples], dtype=int)
        self.left = np.array([t[1] for t in triples], dtype=int)
        self.right = np.array([t[2] for t in triples], dtype=int)
        # every output index has at least the pair (gamma, 0)
        self.starts = np.searchsorted(out, np.arange(self.size), side='left')

    def _build_diff_tables(self):
        self.diff_source = []
        self.diff_factor = []
        if self.order == 0:
            return
        lower = self.indices[:self.prefix(self.order - 1)]
        for direction in range(self.dim):
            sources = []
            factors = []
            for beta in lower:
                raised = list(beta)
                raised[direction] += 1
                sources.append(self.index_of[tuple(raised)])
                factors.append(float(raised[direction]))
            self.diff_source.append(np.array(sources, dtype=int))
            self.diff_factor.append(np.array(factors, dtype=float))

    def prefix(self, order):
        """
        Number of coefficients of degree lower or equal to order.

        :param order:
        :type order: int
        :return:
        :rtype: int
        """
        return self._prefix[order]

    def from_directions(self, directions):
        """
        Exponent tuple of the derivative taken once along each of the given directions.

        >>> get_basis(3, 4).from_directions([0, 0, 2])
        (2, 0, 1)
        """
        exponents = [0] * self.dim
        for direction in directions:
            exponents[direction] += 1
        return tuple(exponents)

    def __repr__(self):
        return '<JetBasis dim=%d order=%d size=%d>' % (self.dim, self.order, self.size)


@lru_cache(maxsize=None)
def get_basis(dim, order):
    """
    Shared basis instance for dim and order.

    :rtype: JetBasis
    """
    return JetBasis(dim, order)
