#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Single-manifold Riemannian calculus on charts.
"""
from .chart import Chart
from .fields import Field, ExprField, CallableField, MetricField, as_field
from .kernel import (LocalGeometry, Curvature, GradientDivergence, check_positive_definite, inner,
                     christoffel_symbols, riemann_tensor, apply_curvature, orthonormal_frame,
                     christoffel, riemann_ricci, lie_bracket, covariant_derivative, gradient_divergence,
                     killing_residual, einstein_residual, metric_compatibility_residual, bianchi_residual,
                     ricci_symmetry_residual)

VectorField = ExprField
