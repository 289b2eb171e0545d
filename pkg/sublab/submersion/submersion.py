#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Riemannian submersions with one dimensional fibres: vertical and horizontal splits, adapted frames and structure
coefficients.

With ``L = G^-1 dpi^T (dpi G^-1 dpi^T)^-1`` the horizontal lift of a base vector w is ``L w``, and ``H = L dpi`` is the
g-orthogonal projector onto the horizontal space. The base frame is built on the base chart by Gram-Schmidt and
pulled back along the projection, so that every frame field and structure coefficient is a jet over the total space.
"""
import logging
from collections import namedtuple
from functools import cached_property

import numpy as np

from ..jets import einsum, stack, power, jet_inverse
from ..geometry import orthonormal_frame, inner
from ..maps import SmoothMap, MapJets
from ..exceptions import ModelBuildError, RankDeficientError, DegenerateMetricError

logger = logging.getLogger(__name__)

#: relative size of the smallest singular value of dpi below which the rank is deficient
RANK_TOLERANCE = 1e-10

Split = namedtuple('Split', ['vertical', 'horizontal', 'vertical_projector', 'horizontal_projector'])
AdaptedFrame = namedtuple('AdaptedFrame', ['horizontal', 'vertical', 'base', 'frame'])
StructureCoefficients = namedtuple('StructureCoefficients', ['kappa', 'dual', 'brackets', 'horizontal_remainder'])
FrameResiduals = namedtuple('FrameResiduals', ['orthonormality', 'isometry', 'kernel'])


class RiemannianSubmersion(SmoothMap):
    """
    Projection ``pi: (P, g) -> (M, h)`` with ``dim P = dim M + 1``.

    The submersion property itself (rank of dpi and isometry on the horizontal space) is checked per point by
    :meth:`SubmersionJets.residuals`, it is not assumed.
    """

    def __init__(self, domain_metric, codomain_metric, components, **kwargs):
        super(RiemannianSubmersion, self).__init__(domain_metric, codomain_metric, components, **kwargs)
        if self.domain.dim != self.codomain.dim + 1:
            raise ModelBuildError('only one dimensional fibres are supported, got a %d dimensional total space over '
                                  'a %d dimensional base' % (self.domain.dim, self.codomain.dim))

    @property
    def is_submersion(self):  # pylint:disable=missing-docstring
        return True

    @property
    def base_dim(self):
        """
        Dimension n of the base, the number of horizontal frame vectors.
        """
        return self.codomain.dim

    def jets(self, point):
        """
        Jets of the submersion around a point.

        :rtype: SubmersionJets
        """
        return SubmersionJets(self, point)


class SubmersionJets(MapJets):
    """
    Adapted frame, structure coefficients and the field ``X = sum kappa_i eps_i`` around a total space point.
    """

    def __init__(self, submersion, point):
        super(SubmersionJets, self).__init__(submersion, point)
        singular = np.linalg.svd(self.dphi.value, compute_uv=False)
        if singular[-1] <= RANK_TOLERANCE * max(1.0, singular[0]):
            raise RankDeficientError('differential of the projection has rank below %d' % submersion.base_dim,
                                     point=self.point)
        self.n = submersion.base_dim

    @cached_property
    def lift_matrix(self):
        """
        ``L[i, a]``, horizontal lift of base vectors.
        """
        ginv = self.domain.ginv
        raised = einsum('ij,aj->ia', ginv, self.dphi)
        gram = einsum('aj,jb->ab', self.dphi, raised)
        try:
            gram_inverse = jet_inverse(gram, point=self.point)
        except DegenerateMetricError:
            raise RankDeficientError('horizontal lift is singular', point=self.point)
        return einsum('ia,ab->ib', raised, gram_inverse)

    @cached_property
    def horizontal_projector(self):
        """
        ``H[i, j]``, g-orthogonal projector onto the horizontal space.
        """
        return einsum('ia,aj->ij', self.lift_matrix, self.dphi)

    @cached_property
    def base_frame(self):
        """
        Orthonormal base frame eps_r, built on the base chart and pulled back: rows are codomain vectors.
        """
        return self.pull_back(orthonormal_frame(self.codomain.g, point=self.image))

    @cached_property
    def adapted_frame(self):
        """
        Horizontal lifts e_r of the base frame and the unit vertical vector.

        :rtype: AdaptedFrame
        """
        horizontal = einsum('ib,rb->ri', self.lift_matrix, self.base_frame)
        complement = -self.horizontal_projector + np.eye(self.domain.dim)
        norms = [self.domain.norm(complement.value[:, j]) for j in range(self.domain.dim)]
        column = complement[:, int(np.argmax(norms))]
        vertical = column * power(inner(self.domain.g, column, column), -0.5)
        frame = stack([horizontal[r] for r in range(self.n)] + [vertical])
        return AdaptedFrame(horizontal, vertical, self.base_frame, frame)

    @property
    def horizontal_frame(self):  # pylint:disable=missing-docstring
        return self.adapted_frame.horizontal

    @property
    def vertical(self):  # pylint:disable=missing-docstring
        return self.adapted_frame.vertical

    @cached_property
    def structure_coefficients(self):
        """
        ``[F_r, F_s] = D^k_rs F_k`` over the full adapted frame F, with ``kappa_i = D^(n+1)_(i, n+1)``.

        :rtype: StructureCoefficients
        """
        frame = self.adapted_frame.frame
        directional = einsum('rj,skj->rsk', frame, frame.gradient())
        brackets = directional - directional.permute('rsk->srk')
        lowered = frame.contract('kj,ij->ki', self.domain.g)
        dual = brackets.contract('rsi,ki->rsk', lowered)
        kappa = stack([dual[i, self.n, self.n] for i in range(self.n)])
        remainder = float(np.max(np.abs(dual.value[:self.n, self.n, :self.n]))) if self.n else 0.0
        return StructureCoefficients(kappa, dual, brackets, remainder)

    @property
    def kappa(self):  # pylint:disable=missing-docstring
        return self.structure_coefficients.kappa

    @cached_property
    def x_field(self):
        """
        ``X = sum kappa_i eps_i`` as a section jet of order 2; the tension field is ``-X``.
        """
        return einsum('r,ra->a', self.kappa, self.base_frame)

    @cached_property
    def x_lift(self):
        """
        Horizontal lift ``sum kappa_i e_i`` of X.
        """
        return einsum('r,ri->i', self.kappa, self.horizontal_frame)

    def split(self):
        """
        Plain vertical and horizontal bases and projectors.

        :rtype: Split
        """
        horizontal_projector = np.asarray(self.horizontal_projector.value)
        return Split(np.asarray(self.vertical.value)[np.newaxis, :], np.asarray(self.horizontal_frame.value),
                     np.eye(self.domain.dim) - horizontal_projector, horizontal_projector)

    def residuals(self):
        """
        Orthonormality of the adapted frame, isometry of dpi on the horizontal space and ``|dpi e_(n+1)|``.

        :rtype: FrameResiduals
        """
        frame = np.asarray(self.adapted_frame.frame.value)
        orthonormality = np.max(np.abs(frame @ self.domain.g.value @ frame.T - np.eye(self.domain.dim)))
        pushed = self.pushed_frame(self.horizontal_frame)
        isometry = np.max(np.abs(pushed @ self.codomain.g.value @ pushed.T - np.eye(self.n)))
        kernel = self.h_norm(self.dphi.value @ frame[self.n])
        return FrameResiduals(float(orthonormality), float(isometry), float(kernel))


def submersion_jets(submersion, point):
    """
    :class:`SubmersionJets` of a submersion at a point; other maps raise :class:`ModelBuildError`.
    """
    if not isinstance(submersion, RiemannianSubmersion):
        raise ModelBuildError('%r is not a Riemannian submersion' % (submersion,))
    return submersion.jets(point)


def split_spaces(submersion, point):
    """
    Vertical space ``ker dpi`` and its g-orthogonal complement at a point.

    :rtype: Split
    """
    return submersion_jets(submersion, point).split()


def adapted_frame(submersion, point):
    """
    Adapted orthonormal frame around a point, as jets of order 3.

    :rtype: AdaptedFrame
    """
    return submersion_jets(submersion, point).adapted_frame


def structure_coefficients(submersion, point):
    """
    Structure coefficients of the adapted frame around a point, as jets of order 2.

    :rtype: StructureCoefficients
    """
    return submersion_jets(submersion, point).structure_coefficients
