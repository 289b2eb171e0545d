#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
JSON Utils
"""
import dataclasses
import json

import numpy as np

from .jets import Jet


class SublabEncoder(json.JSONEncoder):
    """
    JSON Encoder for sublab reports: numpy values, jets (by value) and dataclasses.

    >>> json.dumps({'value': np.float64(0.1), 'shape': np.arange(2)}, cls=SublabEncoder)
    '{"value": 0.1, "shape": [0, 1]}'
    """

    def default(self, o):  # pylint:disable=method-hidden
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.floating):
            return float(o)
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, Jet):
            return np.asarray(o.value).tolist()
        if dataclasses.is_dataclass(o) and not isinstance(o, type):
            return dataclasses.asdict(o)
        return str(o)  # pragma: no cover
