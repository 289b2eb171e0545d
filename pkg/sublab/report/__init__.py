#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Run configuration, reports and self validation.
"""
from .config import RunConfig, FORMATS, config_from_dict, load_config, config_from_options, inline_model
from .report import (Report, CSV_COLUMNS, build_report, manifold_findings, run_check, format_report, write_atomic,
                     emit_report, load_report, recheck_report)
from .validate import SuiteResult, TOLERANCES, draw_points, self_validate, validation_passed
