#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Truncated multivariate Taylor expansions (jets) with tensor values.

A :class:`Jet` stores normalized Taylor coefficients ``d^alpha f / alpha!`` in its last axis; leading axes hold the
tensor shape of the quantity. Arithmetic mixes jets with plain numbers and numpy arrays, which behave as jets with
vanishing derivatives.

>>> x, y = lift_point([1.0, 2.0], order=2)
>>> f = x * x * y
>>> float(f.value), f.derivative((1, 0)), f.derivative((1, 1)), f.derivative((0, 2))
(2.0, 4.0, 2.0, 0.0)
"""
import numpy as np

from .basis import get_basis
from ..exceptions import InvalidPointError, JetOrderError

_LETTERS = 'abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ'


def _common_basis(*bases):
    bases = [basis for basis in bases if basis is not None]
    dims = set(basis.dim for basis in bases)
    if len(dims) > 1:
        raise ValueError('cannot combine jets of dimensions %s' % sorted(dims))
    order = min(basis.order for basis in bases)
    return get_basis(bases[0].dim, order)


def _free_letter(*specs):
    used = set(''.join(specs))
    for letter in _LETTERS:
        if letter not in used:
            return letter
    raise ValueError('no free index letter left in %r' % (specs,))  # pragma: no cover


class Jet(object):
    """
    Tensor-valued truncated Taylor expansion.

    :param coeffs: array of shape ``tensor_shape + (basis.size,)``
    :param basis: multi-index basis of the expansion
    :type basis: JetBasis
    """
    __array_priority__ = 1000

    def __init__(self, coeffs, basis):
        coeffs = np.array(coeffs, dtype=float)
        if coeffs.ndim == 0 or coeffs.shape[-1] != basis.size:
            raise ValueError('coefficient array of shape %s does not fit %r' % (coeffs.shape, basis))
        coeffs.flags.writeable = False
        self.coeffs = coeffs
        self.basis = basis

    @classmethod
    def constant(cls, value, basis):
        """
        Jet with the given value and vanishing derivatives.

        :rtype: Jet
        """
        value = np.asarray(value, dtype=float)
        coeffs = np.zeros(value.shape + (basis.size,))
        coeffs[..., 0] = value
        return cls(coeffs, basis)

    @property
    def dim(self):
        """
        Number of independent variables.
        """
        return self.basis.dim

    @property
    def order(self):
        """
        Truncation order.
        """
        return self.basis.order

    @property
    def shape(self):
        """
        Tensor shape of the value.
        """
        return self.coeffs.shape[:-1]

    @property
    def ndim(self):  # pylint:disable=missing-docstring
        return len(self.shape)

    @property
    def value(self):
        """
        Plain value at the expansion point.

        :rtype: numpy.ndarray
        """
        return self.coeffs[..., 0]

    def __len__(self):
        if not self.shape:
            raise TypeError('len() of a scalar jet')
        return self.shape[0]

    def __iter__(self):
        for i in range(len(self)):
            yield self[i]

    def __float__(self):
        if self.shape:
            raise TypeError('only scalar jets can be converted to float')
        return float(self.coeffs[0])

    def __repr__(self):
        return '<Jet shape=%s dim=%d order=%d value=%s>' % (self.shape, self.dim, self.order, self.value)

    def taylor(self, alpha):
        """
        Normalized Taylor coefficient of multi-index alpha.
        """
        return self.coeffs[..., self.basis.index_of[tuple(alpha)]]

    def derivative(self, alpha):
        """
        Partial derivative of multi-index alpha (exponents per variable) at the expansion point.

        :param alpha: exponents per variable
        :type alpha: tuple
        :return:
        :rtype: float|numpy.ndarray
        """
        alpha = tuple(alpha)
        if sum(alpha) > self.order:
            raise JetOrderError('derivative of degree %d requested from a jet of order %d' % (sum(alpha), self.order))
        index = self.basis.index_of[alpha]
        ret = self.coeffs[..., index] * self.basis.factorials[index]
        return float(ret) if ret.ndim == 0 else ret

    def truncate(self, order):
        """
        Drop every coefficient of degree above order.

        :rtype: Jet
        """
        if order > self.order:
            raise JetOrderError('cannot raise a jet of order %d to order %d' % (self.order, order))
        if order == self.order:
            return self
        basis = get_basis(self.dim, order)
        return Jet(self.coeffs[..., :basis.size], basis)

    def rebase(self, basis):
        """
        Same jet in a compatible (possibly lower order) basis.
        """
        if basis is self.basis:
            return self
        if basis.dim != self.dim:
            raise ValueError('cannot rebase a %d-variable jet on %r' % (self.dim, basis))
        return self.truncate(basis.order)

    def __getitem__(self, key):
        if not isinstance(key, tuple):
            key = (key,)
        if Ellipsis in key:
            raise IndexError('ellipsis indexing is not supported on jets')
        return Jet(self.coeffs[key], self.basis)

    def reshape(self, *shape):
        """
        Jet with the same coefficients and another tensor shape.
        """
        if len(shape) == 1 and isinstance(shape[0], tuple):
            shape = shape[0]
        return Jet(self.coeffs.reshape(tuple(shape) + (self.basis.size,)), self.basis)

    @property
    def T(self):  # pylint:disable=invalid-name
        """
        Transposed matrix jet.
        """
        if self.ndim != 2:
            raise ValueError('transpose needs a matrix jet')
        return self.permute('ij->ji')

    def sum(self, axis=None):
        """
        Sum over tensor axes.

        :param axis: tensor axis or tuple of axes, None sums over every tensor axis
        :rtype: Jet
        """
        if axis is None:
            axis = tuple(range(self.ndim))
        elif not isinstance(axis, tuple):
            axis = (axis,)
        axis = tuple(a % self.ndim for a in axis)
        return Jet(self.coeffs.sum(axis=axis), self.basis)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Jet):
            basis = _common_basis(self.basis, other.basis)
            return self.rebase(basis), other.rebase(basis)
        return self, None

    def __add__(self, other):
        if isinstance(other, Jet):
            this, other = self._coerce(other)
            return Jet(this.coeffs + other.coeffs, this.basis)
        other = np.asarray(other, dtype=float)
        shape = np.broadcast_shapes(self.shape, other.shape)
        coeffs = np.array(np.broadcast_to(self.coeffs, shape + (self.basis.size,)))
        coeffs[..., 0] += other
        return Jet(coeffs, self.basis)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.coeffs, self.basis)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, Jet):
            return self + (-other)
        return self + np.negative(np.asarray(other, dtype=float))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            this, other = self._coerce(other)
            basis = this.basis
            pairs = this.coeffs[..., basis.left] * other.coeffs[..., basis.right]
            return Jet(np.add.reduceat(pairs, basis.starts, axis=-1), basis)
        other = np.asarray(other, dtype=float)
        return Jet(self.coeffs * other[..., np.newaxis], self.basis)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            from .functions import reciprocal
            return self * reciprocal(other)
        other = np.asarray(other, dtype=float)
        if np.any(other == 0):
            raise ZeroDivisionError('jet division by zero')
        return Jet(self.coeffs / other[..., np.newaxis], self.basis)

    def __rtruediv__(self, other):
        from .functions import reciprocal
        return reciprocal(self) * other

    def __pow__(self, exponent):
        from .functions import power
        return power(self, exponent)

    def __rpow__(self, base):
        from .functions import power
        return power(base, self)

    def __matmul__(self, other):
        spec = {(2, 2): 'ij,jk->ik', (2, 1): 'ij,j->i', (1, 2): 'j,jk->k', (1, 1): 'i,i->'}
        key = (self.ndim, other.ndim if isinstance(other, Jet) else np.ndim(other))
        if key not in spec:
            raise ValueError('matmul needs vector or matrix operands, got shapes %s' % (key,))
        return einsum(spec[key], self, other)

    def __rmatmul__(self, other):
        spec = {(2, 2): 'ij,jk->ik', (2, 1): 'ij,j->i', (1, 2): 'j,jk->k', (1, 1): 'i,i->'}
        key = (np.ndim(other), self.ndim)
        if key not in spec:
            raise ValueError('matmul needs vector or matrix operands, got shapes %s' % (key,))
        return einsum(spec[key], other, self)

    # calculus

    def diff(self, direction):
        """
        Partial derivative along a variable, one order lower.

        :param direction: variable index
        :type direction: int
        :rtype: Jet
        """
        if self.order == 0:
            raise JetOrderError('cannot differentiate a jet of order 0')
        basis = get_basis(self.dim, self.order - 1)
        coeffs = self.coeffs[..., self.basis.diff_source[direction]] * self.basis.diff_factor[direction]
        return Jet(coeffs, basis)

    def gradient(self):
        """
        All first partial derivatives, stacked in a new last tensor axis.

        :rtype: Jet
        """
        if self.order == 0:
            raise JetOrderError('cannot differentiate a jet of order 0')
        parts = [self.diff(direction).coeffs for direction in range(self.dim)]
        return Jet(np.stack(parts, axis=-2), get_basis(self.dim, self.order - 1))

    def permute(self, spec):
        """
        Permute or trace tensor axes with an einsum spec such as ``'jli->lij'``.

        :rtype: Jet
        """
        return einsum(spec, self)

    def contract(self, spec, other):
        """
        Tensor contraction with another jet or array, given as a two operand einsum spec.

        >>> x, y = lift_point([1.0, 2.0], order=1)
        >>> m = stack([[x, y], [y, x]])
        >>> v = m.contract('ij,j->i', stack([y, 1.0]))
        >>> v.value.tolist(), v.derivative((1, 0)).tolist()
        ([4.0, 5.0], [2.0, 1.0])
        """
        return einsum(spec, self, other)

    def compose(self, delta):
        """
        Substitute the variables of this jet by ``q + delta`` where delta is a vector jet (over other variables)
        without constant term.

        :param delta: vector jet of shape ``(self.dim,)`` with zero value
        :type delta: Jet
        :return: jet over the variables of delta, of order ``min(self.order, delta.order)``
        :rtype: Jet
        """
        if delta.shape != (self.dim,):
            raise ValueError('composition needs a vector jet of %d components' % self.dim)
        order = min(self.order, delta.order)
        delta = delta.truncate(order)
        if np.any(delta.value != 0):
            delta = delta - delta.value
        basis = delta.basis
        outer = self.basis
        powers = np.zeros((outer.size, basis.size))
        computed = {}
        for position, alpha in enumerate(outer.indices):
            degree = sum(alpha)
            if degree > order:
                break
            if degree == 0:
                current = Jet.constant(1.0, basis)
            else:
                variable = next(i for i, a in enumerate(alpha) if a)
                lowered = list(alpha)
                lowered[variable] -= 1
                current = computed[tuple(lowered)] * delta[variable]
            computed[alpha] = current
            powers[position] = current.coeffs
        return Jet(np.tensordot(self.coeffs, powers, axes=([-1], [0])), basis)


def einsum(spec, *operands):
    """
    Einstein summation over one or two operands, jets or arrays. Spec letters index tensor axes only.

    :param spec: einsum specification with explicit output, e.g. ``'kl,lij->kij'``
    :type spec: str
    :rtype: Jet|numpy.ndarray
    """
    inputs, output = spec.replace(' ', '').split('->')
    inputs = inputs.split(',')
    if len(inputs) != len(operands):
        raise ValueError('einsum spec %r does not match %d operands' % (spec, len(operands)))
    jets = [operand for operand in operands if isinstance(operand, Jet)]
    if not jets:
        return np.einsum(spec, *operands)
    extra = _free_letter(spec)
    if len(operands) == 1:
        jet = operands[0]
        return Jet(np.einsum('%s%s->%s%s' % (inputs[0], extra, output, extra), jet.coeffs), jet.basis)
    if len(operands) != 2:
        raise ValueError('jet einsum supports one or two operands')
    left, right = operands
    if len(jets) == 1:
        if isinstance(left, Jet):
            coeffs = np.einsum('%s%s,%s->%s%s' % (inputs[0], extra, inputs[1], output, extra), left.coeffs,
                               np.asarray(right, dtype=float))
            return Jet(coeffs, left.basis)
        coeffs = np.einsum('%s,%s%s->%s%s' % (inputs[0], inputs[1], extra, output, extra),
                           np.asarray(left, dtype=float), right.coeffs)
        return Jet(coeffs, right.basis)
    left, right = left._coerce(right)  # pylint:disable=protected-access
    basis = left.basis
    pairs = np.einsum('%s%s,%s%s->%s%s' % (inputs[0], extra, inputs[1], extra, output, extra),
                      left.coeffs[..., basis.left], right.coeffs[..., basis.right])
    return Jet(np.add.reduceat(pairs, basis.starts, axis=-1), basis)


def as_jet(value, basis):
    """
    Jet view of a jet, number or array in the given basis.

    :rtype: Jet
    """
    if isinstance(value, Jet):
        return value.rebase(_common_basis(value.basis, basis))
    return Jet.constant(value, basis)


def _flatten_basis(items):
    bases = []
    for item in items:
        if isinstance(item, Jet):
            bases.append(item.basis)
        elif isinstance(item, (list, tuple)):
            bases.extend(_flatten_basis(item))
    return bases


def _stack_nested(items, basis):
    if isinstance(items, (list, tuple)):
        return np.stack([_stack_nested(item, basis) for item in items], axis=0)
    return as_jet(items, basis).coeffs


def stack(items, axis=0, basis=None):
    """
    Stack jets, numbers or nested lists of them into one tensor jet.

    :param items: sequence (possibly nested) of jets and numbers
    :param axis: tensor axis of the new dimension, for flat sequences
    :param basis: basis to use when items hold no jet
    :rtype: Jet
    """
    bases = _flatten_basis(items)
    if basis is not None:
        bases.append(basis)
    if not bases:
        raise ValueError('stack needs at least one jet or an explicit basis')
    basis = _common_basis(*bases)
    coeffs = _stack_nested(list(items), basis)
    ret = Jet(coeffs, basis)
    if axis != 0:
        ret = Jet(np.moveaxis(coeffs, 0, axis % ret.ndim), basis)
    return ret


def concatenate(items, axis=0):
    """
    Concatenate tensor jets along an existing tensor axis.

    :rtype: Jet
    """
    basis = _common_basis(*_flatten_basis(items))
    jets = [as_jet(item, basis) for item in items]
    ndim = jets[0].ndim
    return Jet(np.concatenate([jet.coeffs for jet in jets], axis=axis % ndim), basis)


def lift_point(coords, active=None, order=4):
    """
    Seed jets of the coordinate functions at a point.

    :param coords: coordinates of the point
    :param active: indices of the variables that carry a unit first derivative, all by default
    :param order: truncation order
    :return: vector jet, one component per coordinate
    :rtype: Jet
    """
    coords = np.array(coords, dtype=float).reshape(-1)
    if coords.size == 0:
        raise InvalidPointError('cannot lift a point without coordinates')
    if not np.all(np.isfinite(coords)):
        raise InvalidPointError('non-finite coordinates %s' % coords.tolist())
    dim = coords.size
    active = range(dim) if active is None else active
    basis = get_basis(dim, order)
    coeffs = np.zeros((dim, basis.size))
    coeffs[:, 0] = coords
    if order > 0:
        for i in active:
            if not 0 <= i < dim:
                raise InvalidPointError('active index %r out of range for %d coordinates' % (i, dim))
            coeffs[i, 1 + i] = 1.0
    return Jet(coeffs, basis)


def identity(dim, basis):
    """
    Constant identity matrix jet.
    """
    return Jet.constant(np.eye(dim), basis)
