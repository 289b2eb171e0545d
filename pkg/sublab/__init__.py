#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Numerical verification of harmonic and biharmonic maps and Riemannian submersions.
"""
from .api import build, check, validate, SublabApi, SublabException

from .__version__ import __version__
