import math

import pytest
from hypothesis import given, strategies as st

from qkr_econ.core import CipherSpec, QuantumScenario, YEAR_SECONDS
from qkr_econ.cost import attack_plan
from qkr_econ.feasibility import (FeasibilityFamily, family_coefficient, required_speed,
                                  tradeoff_curve)

FAM = FeasibilityFamily(1e8, 100, 128, 57854)


def test_family_coefficient_examples():
    a = family_coefficient(1e8, 100, 128, 57854)
    assert a == pytest.approx(1.423e-42, rel=5e-3)
    assert family_coefficient(2e8, 100, 128, 57854) == pytest.approx(2 * a, rel=1e-15)
    assert family_coefficient(1e8, 100, 129, 57854) == pytest.approx(a / 2, rel=1e-15)
    assert FAM.coefficient == a
    with pytest.raises(ValueError):
        family_coefficient(0, 100, 128, 1)


def test_required_speed_worked_point():
    s_total, hz = required_speed(1.423e-42, 1000, 100)
    assert s_total == pytest.approx(2.65e22, rel=1e-2)
    assert hz == pytest.approx(8.403e12, rel=1e-2)


def test_required_speed_cheap_machine():
    # sqrt(50 / 1.423e-42) / (100 * 3.154e7)
    _, hz = required_speed(1.423e-42, 50, 100)
    assert hz == pytest.approx(1.8794e12, rel=1e-4)
    # inverting: at that speed the family admits exactly $50 circuit-years
    fam_alpha = 1.423e-42
    assert fam_alpha * (hz * 100 * YEAR_SECONDS) ** 2 == pytest.approx(50, rel=1e-12)


def test_required_speed_unit_target():
    s_total, _ = required_speed(3e-7, 3e-7, 1)
    assert s_total == pytest.approx(1.0)


def test_tradeoff_curve():
    rows = tradeoff_curve(FAM, (8.403e12, 1e14), 5)
    assert rows[0][0] == pytest.approx(8.403e12)
    assert rows[0][1] == pytest.approx(1000, rel=1e-2)
    hz = [r[0] for r in rows]
    ratios = [b / a for a, b in zip(hz, hz[1:])]
    assert all(r == pytest.approx(ratios[0]) for r in ratios)
    assert FAM.max_ccy(2e12) == pytest.approx(4 * FAM.max_ccy(1e12), rel=1e-14)
    with pytest.raises(ValueError):
        tradeoff_curve(FAM, (1e9, 1e8), 5)
    with pytest.raises(ValueError):
        tradeoff_curve(FAM, (1e8, 1e9), 1)


def test_nist_speed_is_infeasible():
    # 1.423e-42 * (6e10 * 100 * 3.154e7)**2, direct evaluation
    assert 1.423e-42 * (6e10 * 100 * 3.154e7) ** 2 == pytest.approx(0.050960, rel=1e-4)
    assert FAM.max_ccy(6e10) == pytest.approx(0.050960, rel=5e-3)
    assert not FAM.contains(6e10, 50.0)


@given(st.floats(1e9, 1e15), st.floats(1, 1e9), st.integers(64, 256), st.floats(1, 200))
def test_curve_consistent_with_cost_engine(hz, budget, n, years):
    fam = FeasibilityFamily(budget, years, n, 57894)
    ccy = fam.max_ccy(hz)
    plan = attack_plan(CipherSpec("c", n, 57894, 1000), QuantumScenario("q", hz, ccy), years)
    if plan.parallelism > 1:
        assert plan.cost_usd == pytest.approx(budget, rel=1e-9)


@given(st.floats(1e9, 1e15), st.floats(1e-6, 1e6), st.floats(1, 10), st.floats(0, 1))
def test_membership_monotone(hz, ccy, faster, cheaper):
    if FAM.contains(hz, ccy):
        assert FAM.contains(hz * faster, ccy * cheaper)
