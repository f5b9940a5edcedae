"""Domain types, unit conventions and the Lambert W kernel.

Units at every public boundary: time in years, speed in Hz (circuit layers
per second), money in USD.  Circuit work is counted in layers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

# Seconds per year used throughout the model.  Fixed, not 365.25 * 86400.
YEAR_SECONDS = 3.154e7

_INV_E = math.exp(-1.0)


class NoRealSolution(ValueError):
    """Raised when ``lambert_w`` has no real value at the requested point."""


@dataclass(frozen=True)
class CipherSpec:
    """Quantum-circuit view of an ideal cipher."""

    name: str
    key_bits: int
    depth: int
    width: int

    def __post_init__(self):
        for attr in ("key_bits", "depth", "width"):
            if getattr(self, attr) < 1:
                raise ValueError(f"{attr} must be >= 1, got {getattr(self, attr)}")

    @property
    def search_space(self) -> float:
        return 2.0 ** self.key_bits


@dataclass(frozen=True)
class QuantumScenario:
    """A calibrated future world: gate speed and circuit-year rental price."""

    name: str
    gate_speed_hz: float
    ccy_cost_usd: float

    def __post_init__(self):
        if not self.gate_speed_hz > 0:
            raise ValueError(f"gate_speed_hz must be > 0, got {self.gate_speed_hz}")
        if not self.ccy_cost_usd > 0:
            raise ValueError(f"ccy_cost_usd must be > 0, got {self.ccy_cost_usd}")

    @property
    def layers_per_year(self) -> float:
        return self.gate_speed_hz * YEAR_SECONDS


@dataclass(frozen=True)
class AttackPlan:
    """A resolved key-recovery attack.

    ``deadline_years`` is the time limit the plan was built for and
    ``layer_budget`` the layers available within it.  ``time_years`` is how
    long the attack actually runs: the deadline, or the sequential Grover time
    when the deadline is longer than that.
    """

    deadline_years: float
    time_years: float
    layer_budget: float
    oracle_calls: float
    parallelism: float
    cost_ccy: float
    cost_usd: float

    @property
    def ceil_k(self) -> int:
        return math.ceil(self.parallelism)


@dataclass(frozen=True)
class Candidate:
    time_years: float
    profit_usd: float
    label: str  # no-attack | boundary | sequential | interior-W0 | interior-W-1


@dataclass(frozen=True)
class ProfitOutcome:
    attack: bool
    time_years: float | None
    profit_usd: float
    candidates: list[Candidate] = field(default_factory=list)

    @property
    def decision(self) -> str:
        return f"attack(T={self.time_years:.6g}y)" if self.attack else "no-attack"


def years_to_layers(years: float, scenario: QuantumScenario) -> float:
    """Layers a single circuit advances within ``years``."""
    if not years > 0:
        raise ValueError(f"years must be > 0, got {years}")
    return years * scenario.gate_speed_hz * YEAR_SECONDS


def _halley(w: float, x: float) -> float:
    for _ in range(100):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        if wp1 == 0.0:
            return w
        step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w_next = w - step
        if not math.isfinite(w_next):
            return w
        if abs(step) <= 1e-14 * max(1.0, abs(w_next)):
            return w_next
        w = w_next
    return w


def lambert_w(branch: int, x: float) -> float:
    """Real Lambert W: the solution ``w`` of ``w * exp(w) = x``.

    Parameters
    ----------
    branch : int
        ``0`` for the principal branch (``w >= -1``), ``-1`` for the lower
        branch (``w <= -1``).
    x : float
        Argument.  The principal branch needs ``x >= -1/e``; the lower branch
        needs ``-1/e <= x < 0``.

    Raises
    ------
    NoRealSolution
        If ``x < -1/e``.
    ValueError
        For an unknown branch, or ``x >= 0`` on the lower branch.
    """
    if branch not in (0, -1):
        raise ValueError(f"branch must be 0 or -1, got {branch!r}")
    if math.isnan(x):
        raise ValueError("x is NaN")
    # allow a few ulps below -1/e from rounding in the caller
    gap = x + _INV_E
    if gap < -4e-16:
        raise NoRealSolution(f"no real W({x!r}): argument below -1/e")
    if branch == -1 and x >= 0:
        raise ValueError(f"lower branch requires x < 0, got {x!r}")
    if gap <= 0.0:
        return -1.0

    if branch == 0:
        if x == 0.0:
            return 0.0
        if gap < 0.3:
            p = math.sqrt(2.0 * math.e * gap)
            w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p ** 3
        elif abs(x) < 0.5:
            w = x - x * x
        elif x < 3.0:
            w = 0.5 * math.log1p(x)
        else:
            lx = math.log(x)
            w = lx - math.log(lx)
        return _halley(w, x)

    if gap < 0.3:
        p = math.sqrt(2.0 * math.e * gap)
        w = -1.0 - p - p * p / 3.0 - 11.0 / 72.0 * p ** 3
    else:
        l1 = math.log(-x)
        l2 = math.log(-l1)
        w = l1 - l2 + l2 / l1
    return _halley(w, x)
