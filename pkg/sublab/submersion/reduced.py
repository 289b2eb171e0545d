#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Reduced tension and bitension of a submersion with one dimensional fibres, and the divergence of its tension field.

With ``X = sum kappa_i eps_i`` the tension field is ``-X`` and the reduced bitension is
``-lap_H X + s nabla_X X + Ric^h(X)``. Both signs ``s = +1`` and ``s = -1`` are computed; which one agrees with the
definition-level bitension is decided per point by comparison, never assumed.
"""
from collections import namedtuple

import numpy as np

from .submersion import submersion_jets
from ..maps import normalized

SIGNS = {'plus': 1.0, 'minus': -1.0}

ReducedBitension = namedtuple('ReducedBitension', ['plus', 'minus', 'horizontal_laplacian', 'drift', 'ricci',
                                                   'scale'])
LaplacianSplit = namedtuple('LaplacianSplit', ['horizontal', 'vertical', 'residual'])
Divergence = namedtuple('Divergence', ['div_x', 'div_tension', 'frame_derivatives', 'correction', 'relation'])


def reduced_tension(jets):
    """
    ``-X`` at the point.

    :type jets: SubmersionJets
    :rtype: numpy.ndarray
    """
    return -np.asarray(jets.x_field.value)


def reduced_bitension(jets):
    """
    Both sign variants of the reduced bitension.

    :type jets: SubmersionJets
    :rtype: ReducedBitension
    """
    x_field = jets.x_field
    laplacian = jets.rough_laplacian(x_field, jets.horizontal_frame)
    drift = np.asarray(jets.pullback_derivative(x_field, jets.x_lift).value)
    ricci = np.asarray(jets.codomain.ricci_endomorphism.value) @ np.asarray(x_field.value)
    variants = {name: -laplacian.value + sign * drift + ricci for name, sign in SIGNS.items()}
    scale = laplacian.scale + jets.h_norm(drift) + jets.h_norm(ricci)
    return ReducedBitension(variants['plus'], variants['minus'], laplacian.value, drift, ricci, scale)


def bitension_match(jets, reduced=None):
    """
    Normalized distance of each reduced variant to the definition-level bitension.

    :return: mapping of variant name to residual
    :rtype: dict
    """
    reduced = reduced or reduced_bitension(jets)
    general = jets.bitension
    scale = [general.laplacian.scale, jets.h_norm(general.curvature), reduced.scale]
    return {name: normalized(jets.h_norm(getattr(reduced, name) - general.value), scale) for name in SIGNS}


def tension_reduction_residual(jets):
    """
    Normalized distance between ``-X`` and the definition-level tension.

    :rtype: float
    """
    tension = jets.tension
    difference = reduced_tension(jets) - tension.value
    return normalized(jets.h_norm(difference), [jets.h_norm(piece) for piece in tension.pieces])


def curvature_term_residual(jets):
    """
    Normalized distance between the curvature term of the tension and ``Ric^h`` applied to it.

    :rtype: float
    """
    tension = jets.tension.value
    curvature = jets.curvature_term(tension)
    ricci = np.asarray(jets.codomain.ricci_endomorphism.value) @ tension
    return normalized(jets.h_norm(curvature - ricci), [jets.h_norm(curvature), jets.h_norm(ricci)])


def laplacian_split(jets, section=None):
    """
    Rough Laplacian over the adapted frame, split into horizontal and vertical parts, and its distance to the rough
    Laplacian over the Gram-Schmidt frame.

    :param section: section jet, the tension field by default
    :rtype: LaplacianSplit
    """
    section = jets.tension.jet if section is None else jets.section(section)
    adapted = jets.rough_laplacian(section, jets.adapted_frame.frame)
    reference = jets.rough_laplacian(section)
    horizontal = np.sum(adapted.pieces[:jets.n], axis=0)
    vertical = adapted.pieces[jets.n]
    residual = normalized(jets.h_norm(horizontal + vertical - reference.value), [adapted.scale, reference.scale])
    return LaplacianSplit(horizontal, vertical, residual)


def fibre_variation(jets):
    """
    ``max(|nabla_v X|, |nabla_v nabla_v X|)`` along the unit vertical vector v, normalized by ``|X|``.

    :rtype: float
    """
    first = jets.pullback_derivative(jets.x_field, jets.vertical)
    second = np.asarray(jets.pullback_derivative(first, jets.vertical).value)
    variation = max(jets.h_norm(first.value), jets.h_norm(second))
    return normalized(variation, [jets.h_norm(jets.x_field.value)])


def vertical_derivative(jets):
    """
    Largest ``|nabla_v eps_r|`` over the pulled back base frame; base sections do not vary along fibres.

    :rtype: float
    """
    base = jets.base_frame
    return max(jets.h_norm(jets.pullback_derivative(base[r], jets.vertical).value) for r in range(jets.n))


def horizontal_gradient(jets):
    """
    ``|nabla^h X| = sqrt(sum_r |nabla_(e_r) X|^2)`` normalized by ``|X|``; zero exactly when X is parallel along the
    horizontal frame.

    :rtype: float
    """
    gradient = np.asarray(jets.pullback_gradient(jets.x_field).value)
    frame = np.asarray(jets.horizontal_frame.value)
    derivatives = np.einsum('bi,ri->rb', gradient, frame)
    norm = float(np.sqrt(sum(jets.h_norm(derivatives[r]) ** 2 for r in range(jets.n))))
    return normalized(norm, [jets.h_norm(jets.x_field.value)])


def divergence(jets):
    """
    ``div X = sum_r h(eps_r, nabla_(e_r) X)`` with its split into ``sum_r e_r(kappa_r)`` and the correction
    ``-h(dpi sum_r nabla_(e_r) e_r, X)``.

    :rtype: Divergence
    """
    horizontal = jets.horizontal_frame
    frame = np.asarray(horizontal.value)
    base = np.asarray(jets.base_frame.value)
    h = jets.codomain.g.value
    gradient = np.asarray(jets.pullback_gradient(jets.x_field).value)
    div_x = float(np.einsum('ra,ab,bi,ri->', base, h, gradient, frame))
    frame_derivatives = float(np.einsum('ri,ri->', jets.kappa.gradient().value, frame))
    accelerations = sum(np.asarray(jets.self_derivative(horizontal[r]).value) for r in range(jets.n))
    pushed = jets.dphi.value @ accelerations
    correction = -float(pushed @ h @ np.asarray(jets.x_field.value))
    relation = abs(div_x - frame_derivatives - correction)
    return Divergence(div_x, -div_x, frame_derivatives, correction, relation)


def tension_reduced(submersion, point):
    """
    Reduced tension ``-sum kappa_i eps_i`` at a point.

    :rtype: numpy.ndarray
    """
    return reduced_tension(submersion_jets(submersion, point))


def bitension_reduced(submersion, point, sign_variant=None):
    """
    Reduced bitension at a point.

    :param sign_variant: ``'plus'`` or ``'minus'``, both variants when None
    :return: one vector, or the full :class:`ReducedBitension` when no variant is selected
    """
    reduced = reduced_bitension(submersion_jets(submersion, point))
    if sign_variant is None:
        return reduced
    if sign_variant not in SIGNS:
        raise ValueError('sign variant must be one of %s, got %r' % (sorted(SIGNS), sign_variant))
    return getattr(reduced, sign_variant)


def divergence_tension(submersion, point):
    """
    Divergence of X (and of the tension field) at a point.

    :rtype: Divergence
    """
    return divergence(submersion_jets(submersion, point))
