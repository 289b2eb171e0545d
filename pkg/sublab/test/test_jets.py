#!/usr/bin/env python
# -*- coding: utf-8 -*-
# pylint: disable=no-self-use, pointless-statement, missing-docstring, invalid-name
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ..jets import lift_point, stack, exp, log, sin, cos, sqrt, power, jet_solve, jet_inverse, jet_det, Jet
from ..exceptions import JetOrderError, InvalidPointError, SingularPointError, DegenerateMetricError

COORDINATE = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)
POSITIVE = st.floats(min_value=0.1, max_value=5.0, allow_nan=False, allow_infinity=False)


def test_lift_point():
    x = lift_point([1.5, -2.0], order=3)
    assert x.shape == (2,)
    assert x.order == 3
    assert x.value.tolist() == [1.5, -2.0]
    assert x[0].derivative((1, 0)) == 1.0
    assert x[0].derivative((0, 1)) == 0.0


def test_lift_point_active():
    x = lift_point([1.0, 2.0], active=[1], order=2)
    assert x[0].derivative((1, 0)) == 0.0
    assert x[1].derivative((0, 1)) == 1.0


def test_lift_point_invalid():
    with pytest.raises(InvalidPointError):
        lift_point([1.0, float('nan')])
    with pytest.raises(InvalidPointError):
        lift_point([])


def test_derivative_order():
    x, = lift_point([1.0], order=2)
    f = x * x * x
    assert f.derivative((2,)) == pytest.approx(6.0)
    with pytest.raises(JetOrderError):
        f.derivative((3,))


@settings(max_examples=30, deadline=None)
@given(a=COORDINATE, b=COORDINATE)
def test_product_rule(a, b):
    x, y = lift_point([a, b], order=3)
    f = x * x * y
    assert f.derivative((1, 0)) == pytest.approx(2 * a * b, abs=1e-12)
    assert f.derivative((0, 1)) == pytest.approx(a * a, abs=1e-12)
    assert f.derivative((1, 1)) == pytest.approx(2 * a, abs=1e-12)
    assert f.derivative((2, 1)) == pytest.approx(2.0, abs=1e-12)
    assert f.derivative((0, 2)) == pytest.approx(0.0, abs=1e-12)


@settings(max_examples=30, deadline=None)
@given(a=POSITIVE, b=COORDINATE)
def test_exp_log_inverse(a, b):
    x, y = lift_point([a, b], order=4)
    f = x + 0.5 * y * y
    g = exp(log(f))
    np.testing.assert_allclose(g.coeffs, f.coeffs, rtol=1e-10, atol=1e-10)


@settings(max_examples=30, deadline=None)
@given(a=COORDINATE, b=COORDINATE)
def test_pythagoras(a, b):
    x, y = lift_point([a, b], order=4)
    u = x * y + x
    one = sin(u) * sin(u) + cos(u) * cos(u)
    assert float(one.value) == pytest.approx(1.0)
    np.testing.assert_allclose(one.coeffs[1:], 0.0, atol=1e-9)


@settings(max_examples=30, deadline=None)
@given(a=POSITIVE)
def test_sqrt_power(a):
    x, = lift_point([a], order=4)
    np.testing.assert_allclose(sqrt(x).coeffs, power(x, 0.5).coeffs, rtol=1e-12, atol=1e-12)
    np.testing.assert_allclose((sqrt(x) * sqrt(x)).coeffs, x.coeffs, rtol=1e-10, atol=1e-10)


def test_singular_functions():
    x, = lift_point([-1.0], order=2)
    with pytest.raises(SingularPointError):
        log(x)
    with pytest.raises(SingularPointError):
        sqrt(x)


def _matrix(a, b):
    x, y = lift_point([a, b], order=4)
    return stack([[3.0 + x, y], [y, 3.0 - x]]), stack([x, 1.0 + y * y]), x, y


@settings(max_examples=30, deadline=None)
@given(a=st.floats(min_value=-1.0, max_value=1.0), b=st.floats(min_value=-1.0, max_value=1.0))
def test_solve(a, b):
    matrix, rhs, _, _ = _matrix(a, b)
    solution = jet_solve(matrix, rhs)
    assert solution.shape == (2,)
    np.testing.assert_allclose((matrix @ solution - rhs).coeffs, 0.0, atol=1e-10)


@settings(max_examples=30, deadline=None)
@given(a=st.floats(min_value=-1.0, max_value=1.0), b=st.floats(min_value=-1.0, max_value=1.0))
def test_inverse_det(a, b):
    matrix, _, x, y = _matrix(a, b)
    inverse = jet_inverse(matrix)
    identity = matrix @ inverse
    np.testing.assert_allclose(identity.value, np.eye(2), atol=1e-12)
    np.testing.assert_allclose(identity.coeffs[..., 1:], 0.0, atol=1e-10)
    expected = (3.0 + x) * (3.0 - x) - y * y
    np.testing.assert_allclose(jet_det(matrix).coeffs, expected.coeffs, atol=1e-10)


def test_singular_matrix():
    x, = lift_point([1.0], order=2)
    singular = stack([[x, x], [x, x]])
    with pytest.raises(DegenerateMetricError):
        jet_inverse(singular)


def test_contract_and_gradient():
    x, y = lift_point([1.0, 2.0], order=2)
    f = x * x * y
    gradient = f.gradient()
    assert gradient.shape == (2,)
    assert gradient.value.tolist() == [4.0, 1.0]
    hessian = gradient.gradient()
    np.testing.assert_allclose(hessian.value, [[4.0, 2.0], [2.0, 0.0]])


def test_constant():
    x = lift_point([1.0, 2.0], order=2)
    c = Jet.constant(np.eye(2), x.basis)
    assert c.shape == (2, 2)
    np.testing.assert_allclose(c.coeffs[..., 1:], 0.0)
