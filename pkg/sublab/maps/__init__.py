#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Maps between Riemannian manifolds and their harmonic and biharmonic calculus.
"""
from .smooth_map import SmoothMap
from .calculus import (MapJets, Tension, Laplacian, Bitension, EnergyDensities, normalized, differential,
                       second_fundamental_form, tension_general, pullback_connection, rough_laplacian_along_map,
                       curvature_term, jacobi_operator, bitension_general, energy_densities, DOMAIN_ORDER,
                       CODOMAIN_ORDER)
