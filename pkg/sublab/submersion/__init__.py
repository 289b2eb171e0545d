#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Riemannian submersions with one dimensional fibres: reduced formulas, Einstein residuals and classification.
"""
from .submersion import (RiemannianSubmersion, SubmersionJets, Split, AdaptedFrame, StructureCoefficients,
                         FrameResiduals, submersion_jets, split_spaces, adapted_frame, structure_coefficients)
from .reduced import (ReducedBitension, LaplacianSplit, Divergence, SIGNS, reduced_tension, reduced_bitension,
                      bitension_match, tension_reduction_residual, curvature_term_residual, laplacian_split,
                      fibre_variation, vertical_derivative, horizontal_gradient, divergence, tension_reduced,
                      bitension_reduced, divergence_tension)
from .einstein import (EinsteinData, EinsteinResiduals, ObataResiduals, EINSTEIN_TOLERANCE, check_einstein,
                       einstein_residuals, einstein_residuals_at, einstein_field_residuals, obata_residual)
from .classify import (Tolerances, PointRecord, ClassificationReport, HARMONIC, PROPER_BIHARMONIC, NEITHER,
                       SIGN_CATEGORIES, derive_verdict, tally_signs, resolve_sign, evaluate_point, admissible,
                       worker_count, classify)
