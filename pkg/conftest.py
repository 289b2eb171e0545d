# -*- coding: utf-8 -*-
"""
Test wiring: keep numpy scalar reprs stable for doctests (``True`` rather than ``np.True_`` on numpy >= 2).
"""
import numpy as np

try:
    np.set_printoptions(legacy='1.25')
except (TypeError, ValueError):  # numpy < 2 does not know this legacy mode and needs nothing
    pass
