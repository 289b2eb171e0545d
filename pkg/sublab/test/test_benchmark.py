#!/usr/bin/env python
# -*- coding: utf-8 -*-
# pylint: disable=no-self-use,pointless-statement,missing-docstring,invalid-name,line-too-long
import time

import pytest

from ..maps import MapJets
from ..submersion import classify, evaluate_point
from ..zoo import build_model

HOPF = build_model('hopf')
INVERSION = build_model('inversion')
LOUBEAU_OU = build_model('loubeau_ou')


def case1():
    return MapJets(INVERSION, [1.0, 0.5, -0.5, 1.0]).bitension


def case2():
    return evaluate_point(HOPF, 0, [0.4, 0.3, -1.0])


def case3():
    return evaluate_point(LOUBEAU_OU, 0, [0.7, 0.2, -0.4])


def case4():
    return classify(LOUBEAU_OU, points=10, seed=0)


@pytest.mark.benchmark(
    group="Performance Tests",
    min_time=1,
    max_time=2,
    min_rounds=5,
    timer=time.time,
    disable_gc=True,
    warmup=False
)
@pytest.mark.skipif(True, reason="Disabled")
class TestBenchmark(object):
    def test_case1(self, benchmark):
        ret = benchmark(case1)
        assert ret

    def test_case2(self, benchmark):
        ret = benchmark(case2)
        assert ret

    def test_case3(self, benchmark):
        ret = benchmark(case3)
        assert ret

    def test_case4(self, benchmark):
        ret = benchmark(case4)
        assert ret
