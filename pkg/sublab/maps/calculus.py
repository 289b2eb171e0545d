#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Definition-level calculus of a map ``phi: (M, g) -> (N, h)`` at a point.

Everything is computed from jets of phi, g and h: the second fundamental form, the tension field, the pullback
connection, the rough Laplacian along phi, the curvature term, the Jacobi operator and the bitension field. The
tension field is itself carried as a jet, so that the rough Laplacian of the bitension differentiates it exactly.

The rough Laplacian uses the non negative convention ``lap V = -sum_i (nabla_ei nabla_ei V - nabla_(nabla_ei ei) V)``
and the Jacobi operator is ``J(V) = lap V - R(V)`` with ``R(V) = sum_i R^N(V, dphi ei) dphi ei``.
"""
import logging
from collections import namedtuple
from functools import cached_property

import numpy as np

from ..geometry import LocalGeometry, Field, apply_curvature
from ..jets import Jet, einsum

logger = logging.getLogger(__name__)

#: jet order of everything evaluated on the domain
DOMAIN_ORDER = 4
#: jet order of the codomain quantities before they are composed with the map
CODOMAIN_ORDER = 3

Tension = namedtuple('Tension', ['jet', 'value', 'pieces', 'norm', 'normalized'])
Laplacian = namedtuple('Laplacian', ['value', 'pieces', 'scale'])
Bitension = namedtuple('Bitension', ['value', 'laplacian', 'curvature', 'norm', 'normalized'])
EnergyDensities = namedtuple('EnergyDensities', ['energy', 'bienergy'])


def normalized(quantity_norm, constituent_norms):
    """
    Scale-free residual ``|q| / (1 + sum |constituents|)``.

    >>> normalized(2.0, [1.0, 2.0])
    0.5
    """
    return float(quantity_norm) / (1.0 + float(np.sum(constituent_norms)))


class MapJets(object):
    """
    Jets of a map and of both metrics around a domain point.

    :param smooth_map: the map
    :type smooth_map: sublab.maps.SmoothMap
    :param point: domain chart coordinates
    """

    def __init__(self, smooth_map, point):
        self.map = smooth_map
        self.domain = LocalGeometry(smooth_map.domain_metric, point, order=DOMAIN_ORDER)
        self.x = self.domain.x
        self.point = self.domain.point
        self.phi = smooth_map.evaluate(self.x)
        self.image = np.atleast_1d(np.asarray(self.phi.value, dtype=float))
        self.codomain = LocalGeometry(smooth_map.codomain_metric, self.image, order=CODOMAIN_ORDER)
        self.delta = self.phi - self.image
        logger.debug('jets of %r at %s, image %s', smooth_map, self.point.tolist(), self.image.tolist())

    # jets of the map

    @cached_property
    def dphi(self):
        """
        ``dphi[a, i] = d_i phi^a``.
        """
        return self.phi.gradient()

    @cached_property
    def hessian(self):
        """
        ``hessian[a, i, j] = d_i d_j phi^a``.
        """
        return self.dphi.gradient()

    def pull_back(self, codomain_jet):
        """
        Compose a jet over the codomain point with phi.

        :param codomain_jet: jet over the variables of the codomain chart, centered at the image point
        :rtype: Jet
        """
        return codomain_jet.compose(self.delta)

    @cached_property
    def target_christoffel(self):
        """
        Codomain Christoffel symbols along phi, as jets over the domain.
        """
        return self.pull_back(self.codomain.christoffel)

    @cached_property
    def target_metric(self):
        """
        Codomain metric along phi.
        """
        return self.pull_back(self.codomain.g)

    @property
    def frame(self):
        """
        Orthonormal frame of the domain.
        """
        return self.domain.frame

    def h_norm(self, vector):
        """
        Plain h-norm at the image point.

        :rtype: float
        """
        return self.codomain.norm(vector)

    def section(self, source):
        """
        Jet of a section of the pullback bundle.

        :param source: a jet, a field on the domain chart, or a callable of this object
        :rtype: Jet
        """
        if isinstance(source, Jet):
            return source
        if isinstance(source, Field):
            return source.evaluate(self.x)
        if callable(source):
            return self.section(source(self))
        return Jet.constant(np.asarray(source, dtype=float), self.x.basis)

    # second fundamental form and tension

    @cached_property
    def second_fundamental_form_pieces(self):
        """
        ``(hessian, -Gamma^M . dphi, Gamma^N (dphi, dphi))``, each indexed ``[a, i, j]``; their sum is B.
        """
        domain_part = -einsum('kij,ak->aij', self.domain.christoffel, self.dphi)
        target_part = einsum('aci,cj->aij', einsum('abc,bi->aci', self.target_christoffel, self.dphi), self.dphi)
        return self.hessian, domain_part, target_part

    @cached_property
    def second_fundamental_form(self):
        """
        ``B[a, i, j]`` as jets of order 2.
        """
        hessian, domain_part, target_part = self.second_fundamental_form_pieces
        return hessian + domain_part + target_part

    def trace(self, tensor, frame=None):
        """
        ``sum_r tensor(E_r, E_r)`` over a frame, for tensors indexed ``[a, i, j]``.
        """
        frame = self.frame if frame is None else frame
        return einsum('arj,rj->a', einsum('aij,ri->arj', tensor, frame), frame)

    @cached_property
    def tension(self):
        """
        Tension field ``sum_r B(E_r, E_r)``, with its constituents.

        :rtype: Tension
        """
        pieces = [self.trace(piece) for piece in self.second_fundamental_form_pieces]
        jet = pieces[0] + pieces[1] + pieces[2]
        value = np.asarray(jet.value)
        norm = self.h_norm(value)
        return Tension(jet, value, [np.asarray(p.value) for p in pieces], norm,
                       normalized(norm, [self.h_norm(p.value) for p in pieces]))

    # pullback connection

    def pullback_gradient(self, section):
        """
        ``D[a, i] = d_i V^a + Gamma^N^a_bc d_i phi^b V^c`` for a section jet V.

        :rtype: Jet
        """
        connection = einsum('abc,bi->aci', self.target_christoffel, self.dphi)
        return section.gradient() + connection.contract('aci,c->ai', section)

    def pullback_derivative(self, section, direction):
        """
        Pullback covariant derivative of a section along a domain direction (array or jet).

        :rtype: Jet
        """
        return self.pullback_gradient(section).contract('ai,i->a', direction)

    def pullback_derivative_norm(self, section, direction):
        """
        Normalized norm of a pullback covariant derivative, scaled by its partial and connection terms.

        :rtype: float
        """
        direction = np.asarray(direction.value if isinstance(direction, Jet) else direction, dtype=float)
        partial = np.asarray(section.gradient().value) @ direction
        connection = np.einsum('abc,bi,i,c->a', self.target_christoffel.value, self.dphi.value, direction,
                               np.asarray(section.value))
        return normalized(self.h_norm(partial + connection), [self.h_norm(partial), self.h_norm(connection)])

    def self_derivative(self, vector):
        """
        ``nabla_E E`` for a domain vector jet E.

        :rtype: Jet
        """
        return self.domain.covariant_gradient(vector).contract('jk,j->k', vector)

    def rough_laplacian(self, section, frame=None):
        """
        Rough Laplacian along phi over an orthonormal frame.

        :param section: section jet, at least of order 2
        :param frame: frame jet (rows are the frame vectors), the Gram-Schmidt frame by default
        :return: value, one piece per frame vector (their sum is the value) and the sum of the constituent norms
        :rtype: Laplacian
        """
        frame = self.frame if frame is None else frame
        gradient = self.pullback_gradient(section)
        pieces = []
        scale = 0.0
        for r in range(frame.shape[0]):
            vector = frame[r]
            first = gradient.contract('ai,i->a', vector)
            second = np.asarray(self.pullback_derivative(first, vector).value)
            correction = np.asarray(gradient.contract('ai,i->a', self.self_derivative(vector)).value)
            pieces.append(-(second - correction))
            scale += self.h_norm(second) + self.h_norm(correction)
        return Laplacian(np.sum(pieces, axis=0), pieces, scale)

    # curvature and bitension

    def pushed_frame(self, frame=None):
        """
        Plain values of ``dphi(E_r)``, one row per frame vector.
        """
        frame = self.frame if frame is None else frame
        return np.einsum('ai,ri->ra', self.dphi.value, np.asarray(frame.value if isinstance(frame, Jet) else frame))

    def curvature_term(self, vector, frame=None):
        """
        ``sum_r R^N(V, dphi E_r) dphi E_r`` for a plain vector V at the image point.

        :rtype: numpy.ndarray
        """
        vector = np.asarray(vector.value if isinstance(vector, Jet) else vector, dtype=float)
        riemann = self.codomain.riemann.value
        return sum(apply_curvature(riemann, vector, pushed, pushed) for pushed in self.pushed_frame(frame))

    def jacobi(self, section, frame=None):
        """
        ``J(V) = lap V - R(V)``.

        :rtype: Bitension
        """
        section = self.section(section)
        laplacian = self.rough_laplacian(section, frame)
        curvature = self.curvature_term(section.value, frame)
        value = laplacian.value - curvature
        norm = self.h_norm(value)
        return Bitension(value, laplacian, curvature, norm,
                         normalized(norm, [laplacian.scale, self.h_norm(curvature)]))

    @cached_property
    def bitension(self):
        """
        Bitension field ``J(tension)``.

        :rtype: Bitension
        """
        return self.jacobi(self.tension.jet)

    @cached_property
    def energy_densities(self):
        """
        ``e = |dphi|^2 / 2`` and ``|tension|^2``.

        :rtype: EnergyDensities
        """
        h = self.codomain.g.value
        pushed = self.pushed_frame()
        energy = 0.5 * float(np.einsum('ra,ab,rb->', pushed, h, pushed))
        return EnergyDensities(energy, self.tension.norm ** 2)


def differential(smooth_map, point):
    """
    ``dphi[a, i] = d phi^a / d x^i`` at a point, as jets of order 3.

    :rtype: Jet
    """
    return MapJets(smooth_map, point).dphi


def second_fundamental_form(smooth_map, first, second, point):
    """
    ``B(X, Y)`` in codomain coordinates for plain tangent vectors X, Y at a point.

    :rtype: numpy.ndarray
    """
    form = MapJets(smooth_map, point).second_fundamental_form.value
    return np.einsum('aij,i,j->a', form, np.asarray(first, dtype=float), np.asarray(second, dtype=float))


def tension_general(smooth_map, point):
    """
    Tension field at a point, traced over a g-orthonormal frame.

    :rtype: Tension
    """
    return MapJets(smooth_map, point).tension


def pullback_connection(smooth_map, section, direction, point):
    """
    Pullback covariant derivative of a section along a direction at a point.

    :param section: field on the domain chart, section jet, or callable of :class:`MapJets`
    :rtype: numpy.ndarray
    """
    jets = MapJets(smooth_map, point)
    return np.asarray(jets.pullback_derivative(jets.section(section), direction).value)


def rough_laplacian_along_map(smooth_map, section, point, frame=None):
    """
    Rough Laplacian of a section at a point.

    :param frame: callable of :class:`MapJets` returning a frame jet, the Gram-Schmidt frame by default
    :rtype: Laplacian
    """
    jets = MapJets(smooth_map, point)
    return jets.rough_laplacian(jets.section(section), frame(jets) if frame is not None else None)


def curvature_term(smooth_map, section, point):
    """
    ``sum_r R^N(V, dphi E_r) dphi E_r`` at a point.

    :rtype: numpy.ndarray
    """
    jets = MapJets(smooth_map, point)
    return jets.curvature_term(jets.section(section).value)


def jacobi_operator(smooth_map, section, point):
    """
    ``J(V) = lap V - R(V)`` at a point.

    :rtype: Bitension
    """
    return MapJets(smooth_map, point).jacobi(section)


def bitension_general(smooth_map, point):
    """
    Bitension field at a point.

    :rtype: Bitension
    """
    return MapJets(smooth_map, point).bitension


def energy_densities(smooth_map, point):
    """
    Energy density and bienergy density at a point.

    :rtype: EnergyDensities
    """
    return MapJets(smooth_map, point).energy_densities
