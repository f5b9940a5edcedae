"""Classical brute-force electricity cost, for comparison."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ClassicalRig:
    guesses_per_sec: float = 3.5e8
    power_kw: float = 0.0066
    price_per_kwh: float = 0.08

    def __post_init__(self):
        for name in ("guesses_per_sec", "power_kw", "price_per_kwh"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0")


def per_guess_cost(rig: ClassicalRig, strict_units: bool = False) -> float:
    """USD per key guess.

    The default multiplies kW by 3600, which reproduces the commonly quoted
    5.43e-9 but is not dimensionally a kWh figure.  ``strict_units`` uses
    kWh per guess = power_kw / (guesses_per_sec * 3600).
    """
    if strict_units:
        return rig.power_kw / rig.guesses_per_sec / 3600.0 * rig.price_per_kwh
    return rig.power_kw * rig.price_per_kwh * 3600.0 / rig.guesses_per_sec


def classical_expected_cost(rig: ClassicalRig, key_bits: int, strict_units: bool = False) -> float:
    """Expected cost of exhaustive search: half the key space."""
    if key_bits < 1:
        raise ValueError("key_bits must be >= 1")
    return 2.0 ** (key_bits - 1) * per_guess_cost(rig, strict_units)
