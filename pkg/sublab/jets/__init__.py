#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Exact higher-order differentiation with truncated Taylor expansions (jets).
"""
from .basis import JetBasis, get_basis
from .jet import Jet, einsum, as_jet, stack, concatenate, lift_point, identity
from .functions import exp, log, sin, cos, sqrt, fabs, power, reciprocal, FUNCTIONS
from .linalg import JetMatrix, jet_solve, jet_inverse, jet_det

#: maximal order used by every geometric computation
MAX_ORDER = 4
