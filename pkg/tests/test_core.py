import math

import pytest
from hypothesis import given, strategies as st

from qkr_econ.core import (YEAR_SECONDS, AttackPlan, CipherSpec, NoRealSolution, QuantumScenario,
                           lambert_w, years_to_layers)
from qkr_econ.presets import MANIA, STEADY

INV_E = math.exp(-1)


def fixed_point_w0(x, iters=5000):
    # w = x * exp(-w) contracts for moderate x; independent of Halley
    w = 0.5
    for _ in range(iters):
        w = x * math.exp(-w)
    return w


def bisect_wm1(x, lo=-30.0, hi=-1.0):
    # w * exp(w) decreases on (-inf, -1)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid * math.exp(mid) > x:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_w_trivial_points():
    assert lambert_w(0, 0.0) == 0.0
    assert lambert_w(0, -INV_E) == -1.0
    assert lambert_w(-1, -INV_E) == -1.0


def test_w0_at_one_matches_fixed_point():
    expected = fixed_point_w0(1.0)
    assert expected == pytest.approx(0.567143290409784, rel=1e-14)
    assert lambert_w(0, 1.0) == pytest.approx(expected, rel=1e-13)


def test_wm1_matches_bisection():
    expected = bisect_wm1(-0.04163)
    assert expected == pytest.approx(-4.73362564854164, rel=1e-12)
    assert lambert_w(-1, -0.04163) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("x", [-0.3, -0.1, -1e-3, 0.2, 0.5])
def test_w0_fixed_point_agreement(x):
    assert lambert_w(0, x) == pytest.approx(fixed_point_w0(x), rel=1e-12, abs=1e-15)


def test_below_branch_point_has_no_real_solution():
    with pytest.raises(NoRealSolution):
        lambert_w(0, -0.4)
    with pytest.raises(NoRealSolution):
        lambert_w(-1, -0.37)


def test_lower_branch_domain():
    with pytest.raises(ValueError):
        lambert_w(-1, 0.0)
    with pytest.raises(ValueError):
        lambert_w(-1, 2.0)
    with pytest.raises(ValueError):
        lambert_w(1, 0.5)


@given(st.floats(min_value=-INV_E, max_value=1e300))
def test_w0_inverts(x):
    w = lambert_w(0, x)
    assert w >= -1
    assert abs(w * math.exp(w) - x) <= 1e-12 * max(1.0, abs(x))


@given(st.floats(min_value=-INV_E, max_value=-1e-300))
def test_wm1_inverts(x):
    w = lambert_w(-1, x)
    assert w <= -1
    assert abs(w * math.exp(w) - x) <= 1e-12 * max(1.0, abs(x))


def test_w_near_branch_point_both_sides():
    x = -INV_E + 1e-10
    w0, wm1 = lambert_w(0, x), lambert_w(-1, x)
    assert -1 < w0 < -0.9999
    assert -1.0001 < wm1 < -1


def test_years_to_layers_examples():
    assert years_to_layers(100, MANIA) == pytest.approx(1.892e20, rel=5e-3)
    assert years_to_layers(10, MANIA) == pytest.approx(1.89e19, rel=5e-3)
    assert years_to_layers(1, STEADY) == pytest.approx(3.154e15, rel=1e-15)
    assert YEAR_SECONDS == 3.154e7


def test_years_to_layers_rejects_nonpositive():
    with pytest.raises(ValueError):
        years_to_layers(0, MANIA)


@given(st.floats(1e-3, 1e3), st.floats(1e-3, 1e3), st.floats(1e3, 1e12))
def test_years_to_layers_linear(a, T, hz):
    sc = QuantumScenario("x", hz, 1.0)
    assert years_to_layers(a * T, sc) == pytest.approx(a * years_to_layers(T, sc), rel=1e-15)


def test_type_invariants():
    with pytest.raises(ValueError):
        CipherSpec("bad", 0, 1, 1)
    with pytest.raises(ValueError):
        QuantumScenario("bad", 0.0, 1.0)
    with pytest.raises(ValueError):
        QuantumScenario("bad", 1.0, -1.0)
    assert CipherSpec("c", 10, 1, 1).search_space == 1024.0
    plan = AttackPlan(1, 1, 1, 1, 2.0000001, 1, 1)
    assert plan.ceil_k == 3
