"""Which quantum computers could run an attack within a budget and deadline.

A machine that processes ``s_total`` circuit layers within the deadline can
attack profitably under budget ``b`` iff its circuit-year price satisfies
``C_CCY <= alpha * s_total**2``.  ``s_total`` is a layer count over the whole
deadline; ``gate_hz`` is the per-second speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import core


def family_coefficient(budget_usd: float, years: float, key_bits: int, depth: float) -> float:
    for name, val in (("budget_usd", budget_usd), ("years", years),
                      ("key_bits", key_bits), ("depth", depth)):
        if not val > 0:
            raise ValueError(f"{name} must be > 0, got {val}")
    return 16.0 * budget_usd / (math.pi ** 2 * 2.0 ** key_bits * years * depth ** 2)


@dataclass(frozen=True)
class FeasibilityFamily:
    budget_usd: float
    time_years: float
    key_bits: int
    depth: int

    @property
    def coefficient(self) -> float:
        return family_coefficient(self.budget_usd, self.time_years, self.key_bits, self.depth)

    def total_layers(self, gate_hz: float) -> float:
        return gate_hz * self.time_years * core.YEAR_SECONDS

    def max_ccy(self, gate_hz: float) -> float:
        """Highest circuit-year price still within budget at ``gate_hz``."""
        return self.coefficient * self.total_layers(gate_hz) ** 2

    def contains(self, gate_hz: float, ccy_cost_usd: float) -> bool:
        return ccy_cost_usd <= self.max_ccy(gate_hz)


def required_speed(alpha: float, ccy_target: float, years: float) -> tuple[float, float]:
    """Speed needed to stay in the family at price ``ccy_target``.

    Returns ``(s_total, gate_hz)``: total layers over the deadline, and the
    corresponding layers per second.
    """
    if not alpha > 0 or not ccy_target > 0:
        raise ValueError("alpha and ccy_target must be > 0")
    s_total = math.sqrt(ccy_target / alpha)
    return s_total, s_total / (years * core.YEAR_SECONDS)


def tradeoff_curve(family: FeasibilityFamily, gate_hz_range: tuple[float, float],
                   points: int) -> list[tuple[float, float]]:
    lo, hi = gate_hz_range
    if not 0 < lo < hi:
        raise ValueError(f"need 0 < lo < hi, got {gate_hz_range}")
    if points < 2:
        raise ValueError("points must be >= 2")
    return [(float(g), family.max_ccy(float(g))) for g in np.geomspace(lo, hi, points)]
