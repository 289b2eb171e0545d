#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Model builders, one per module.
"""
