"""Parallelism, attack cost and the sequential-time floor."""

from __future__ import annotations

import math

from .core import AttackPlan, CipherSpec, QuantumScenario, years_to_layers


def parallelism_for(search_space: float, depth: float, layer_budget: float) -> float:
    """Grover instances needed so each bucket finishes within ``layer_budget``.

    Each of ``k`` buckets of size N/k needs (pi/4)*sqrt(N/k) sequential oracle
    calls of ``depth`` layers, so k >= pi^2 N / (16 (t/d)^2).  Never below 1.
    """
    if not layer_budget > 0:
        raise ValueError(f"layer_budget must be > 0, got {layer_budget}")
    calls = layer_budget / depth
    return max(1.0, math.pi ** 2 * search_space / (16.0 * calls * calls))


def required_parallelism(cipher: CipherSpec, layer_budget: float) -> float:
    return parallelism_for(cipher.search_space, cipher.depth, layer_budget)


def sequential_time_for(search_space: float, depth: float,
                        scenario: QuantumScenario) -> float:
    """Years for a single (k=1) Grover search over ``search_space``."""
    return math.pi / 4.0 * math.sqrt(search_space) * depth / scenario.layers_per_year


def sequential_time(cipher: CipherSpec, scenario: QuantumScenario) -> float:
    return sequential_time_for(cipher.search_space, cipher.depth, scenario)


def plan_for(search_space: float, depth: float, scenario: QuantumScenario,
             years: float) -> AttackPlan:
    t = years_to_layers(years, scenario)
    k = parallelism_for(search_space, depth, t)
    if k > 1.0:
        run_time = years
    else:
        # deadline beyond the sequential time: the attack ends early
        run_time = min(years, sequential_time_for(search_space, depth, scenario))
    cost_ccy = run_time * k
    return AttackPlan(
        deadline_years=years,
        time_years=run_time,
        layer_budget=t,
        oracle_calls=t / depth,
        parallelism=k,
        cost_ccy=cost_ccy,
        cost_usd=cost_ccy * scenario.ccy_cost_usd,
    )


def attack_plan(cipher: CipherSpec, scenario: QuantumScenario, years: float) -> AttackPlan:
    """Cheapest plan that recovers a ``cipher`` key within ``years``."""
    return plan_for(cipher.search_space, cipher.depth, scenario, years)


def closed_form_cost(cipher: CipherSpec, scenario: QuantumScenario, years: float) -> float:
    """C_CCY * pi^2 N d^2 / (16 T s^2), valid while the parallelism exceeds 1."""
    s = scenario.layers_per_year
    return (scenario.ccy_cost_usd * math.pi ** 2 * cipher.search_space
            * cipher.depth ** 2 / (16.0 * years * s * s))


def depth_improvement_factor(k: float, beta: float) -> float:
    """Parallelism after shrinking circuit depth by ``beta`` (quadratic return).

    Not clamped at 1; callers decide.
    """
    if not 0 < beta <= 1:
        raise ValueError(f"beta must lie in (0, 1], got {beta}")
    return beta * beta * k
