"""m-to-1 key recovery: find any one of M keys that encrypt the same plaintext.

The oracle encrypts the candidate key (two cipher calls run side by side, so
they add width, not depth) and then checks membership of the result among M
ciphertexts.  With the circuit width capped at the cipher's width, the check
costs ceil(M n / w) extra layers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import AttackPlan, CipherSpec, QuantumScenario
from .cost import attack_plan, plan_for, sequential_time_for


@dataclass(frozen=True)
class BatchSpec:
    num_keys: int
    cipher: CipherSpec

    def __post_init__(self):
        if self.num_keys < 1:
            raise ValueError(f"num_keys must be >= 1, got {self.num_keys}")
        if self.num_keys > self.cipher.search_space:
            raise ValueError("num_keys cannot exceed the key space")

    @property
    def oracle_depth(self) -> int:
        return batch_oracle_depth(self)

    @property
    def effective_search_space(self) -> float:
        return self.cipher.search_space / self.num_keys


def batch_oracle_depth(spec: BatchSpec) -> int:
    c = spec.cipher
    return c.depth + math.ceil(spec.num_keys * c.key_bits / c.width)


def batch_attack_plan(spec: BatchSpec, scenario: QuantumScenario, years: float) -> AttackPlan:
    return plan_for(spec.effective_search_space, batch_oracle_depth(spec), scenario, years)


def batch_sequential_time(spec: BatchSpec, scenario: QuantumScenario) -> float:
    return sequential_time_for(spec.effective_search_space, batch_oracle_depth(spec), scenario)


def batch_time_speedup(num_keys: int) -> float:
    if num_keys < 1:
        raise ValueError("num_keys must be >= 1")
    return math.sqrt(num_keys)


@dataclass(frozen=True)
class BatchComparison:
    single_cost_usd: float
    formula_cost_usd: float
    sqrt_heuristic_cost_usd: float
    oracle_depth: int

    @property
    def discrepancy(self) -> float:
        """Ratio of the sqrt(M) heuristic to the fixed-deadline formula."""
        return self.sqrt_heuristic_cost_usd / self.formula_cost_usd


def compare_batch_costs(spec: BatchSpec, scenario: QuantumScenario,
                        years: float) -> BatchComparison:
    """Fixed-deadline cost with N/M and d_F, next to single-key cost / sqrt(M).

    The two disagree by orders of magnitude for large M; both are reported.
    """
    single = attack_plan(spec.cipher, scenario, years).cost_usd
    formula = batch_attack_plan(spec, scenario, years).cost_usd
    return BatchComparison(single, formula, single / batch_time_speedup(spec.num_keys),
                           batch_oracle_depth(spec))
