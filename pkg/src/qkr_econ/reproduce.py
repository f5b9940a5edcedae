"""Golden regression over the published reference values."""

from __future__ import annotations

from . import presets
from .classical import ClassicalRig, classical_expected_cost, per_guess_cost
from .core import CipherSpec, QuantumScenario
from .cost import attack_plan, depth_improvement_factor
from .feasibility import family_coefficient, required_speed
from .report import Check, rel_check
from .strategy import min_profitable_value

TABLE_TOL = 5e-3
SPEED_TOL = 1e-2

# (years, scenario) -> (t_layers, k, cost_ccy, cost_usd), AES-128 with d = 57894
THRESHOLD_TABLES = {
    (100, "mania"): (1.892e20, 1.962e7, 1.962e9, 9.810e10),
    (100, "optimistic"): (3.154e18, 7.064e10, 7.064e12, 3.532e15),
    (100, "steady"): (3.154e17, 7.064e12, 7.064e14, 3.532e19),
    (10, "mania"): (1.89e19, 1.962e9, 1.962e10, 9.810e11),
    (10, "optimistic"): (3.154e17, 7.064e12, 7.064e13, 3.532e16),
    (10, "steady"): (3.154e16, 7.064e14, 7.064e15, 3.532e20),
    (1, "mania"): (1.89e18, 1.962e11, 1.962e11, 9.810e12),
    (1, "optimistic"): (3.154e16, 7.064e14, 7.064e14, 3.532e17),
    (1, "steady"): (3.154e15, 7.064e16, 7.064e16, 3.532e21),
}

# minimum profitable value at delta**T = 1, quantum mania
MIN_VALUE_COEFFS = {100: 9.81e10, 10: 9.81e11, 1: 9.81e12}

FEASIBILITY = dict(budget=1e8, years=100, key_bits=128, depth=57854, ccy=1000.0,
                   alpha=1.423e-42, s_total=2.65e22, gate_hz=8.403e12)

CLASSICAL_COST = 9.24e29
CLASSICAL_PER_GUESS = 5.43e-9
DEPTH_TENFOLD_COST = 9.8e8  # 100y mania cost after a 10x depth reduction


def table_checks(cipher: CipherSpec = presets.AES128,
                 scenarios: dict[str, QuantumScenario] | None = None) -> list[Check]:
    scenarios = scenarios or presets.SCENARIOS
    out = []
    for (years, name), expected in THRESHOLD_TABLES.items():
        plan = attack_plan(cipher, scenarios[name], years)
        actual = (plan.layer_budget, plan.parallelism, plan.cost_ccy, plan.cost_usd)
        for field, e, a in zip(("t", "k", "cost_ccy", "cost_usd"), expected, actual):
            out.append(rel_check(f"threshold/{years}y/{name}/{field}", e, a, TABLE_TOL))
    return out


def min_value_checks(cipher: CipherSpec = presets.AES128) -> list[Check]:
    return [rel_check(f"min-value/{y}y/delta_pow=1", v,
                      min_profitable_value(cipher, presets.MANIA, y, 1.0), TABLE_TOL)
            for y, v in MIN_VALUE_COEFFS.items()]


def feasibility_checks() -> list[Check]:
    f = FEASIBILITY
    alpha = family_coefficient(f["budget"], f["years"], f["key_bits"], f["depth"])
    s_total, gate_hz = required_speed(alpha, f["ccy"], f["years"])
    return [
        rel_check("feasibility/alpha", f["alpha"], alpha, TABLE_TOL),
        rel_check("feasibility/s_total", f["s_total"], s_total, SPEED_TOL),
        rel_check("feasibility/gate_hz", f["gate_hz"], gate_hz, SPEED_TOL),
    ]


def classical_checks() -> list[Check]:
    rig = ClassicalRig()
    return [
        rel_check("classical/per_guess", CLASSICAL_PER_GUESS, per_guess_cost(rig), 2e-3),
        rel_check("classical/aes128", CLASSICAL_COST, classical_expected_cost(rig, 128), TABLE_TOL),
    ]


def depth_checks(cipher: CipherSpec = presets.AES128) -> list[Check]:
    plan = attack_plan(cipher, presets.MANIA, 100)
    k = depth_improvement_factor(plan.parallelism, 0.1)
    cost = plan.time_years * k * presets.MANIA.ccy_cost_usd
    return [rel_check("depth/beta=0.1/100y/mania/cost_usd", DEPTH_TENFOLD_COST, cost, TABLE_TOL)]


def reproduce(cipher: CipherSpec = presets.AES128) -> list[Check]:
    """Every golden check, in report order."""
    return (table_checks(cipher) + min_value_checks(cipher) + feasibility_checks()
            + classical_checks() + depth_checks(cipher))
