"""Reward functions, profit and the attacker's optimal completion time.

The attacker picks a completion time T.  Cost falls as Lambda / T until the
sequential Grover time T_seq, after which it stays at Lambda / T_seq.  Under
delta-discounting the interior stationary points solve
``delta**T * T**2 = Lambda / (v ln(1/delta))``, which rearranges to
``T = 2 W(sqrt(c) ln(delta) / 2) / ln(delta)`` on either real W branch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Candidate, CipherSpec, NoRealSolution, ProfitOutcome, QuantumScenario, lambert_w
from .cost import attack_plan, sequential_time


@dataclass(frozen=True)
class Constant:
    v0: float

    def __post_init__(self):
        if self.v0 < 0:
            raise ValueError("v0 must be >= 0")


@dataclass(frozen=True)
class Threshold:
    v0: float
    horizon: float

    def __post_init__(self):
        if self.v0 < 0:
            raise ValueError("v0 must be >= 0")
        if not self.horizon > 0:
            raise ValueError("horizon must be > 0")


@dataclass(frozen=True)
class Delta:
    v0: float
    delta: float
    horizon: float = math.inf

    def __post_init__(self):
        if self.v0 < 0:
            raise ValueError("v0 must be >= 0")
        if not 0 < self.delta <= 1:
            raise ValueError(f"delta must lie in (0, 1], got {self.delta}")
        if not self.horizon > 0:
            raise ValueError("horizon must be > 0")


RewardModel = Constant | Threshold | Delta


def horizon_of(model: RewardModel) -> float:
    return math.inf if isinstance(model, Constant) else model.horizon


def reward(model: RewardModel, T: float, v0: float | None = None) -> float:
    """Value of the plaintext when the key is recovered at time ``T``.

    The horizon itself still pays (full value for a threshold, discounted
    value for delta-discounting).
    """
    if T < 0:
        raise ValueError(f"T must be >= 0, got {T}")
    v = model.v0 if v0 is None else v0
    if isinstance(model, Constant):
        return v
    if T > model.horizon:
        return 0.0
    if isinstance(model, Threshold):
        return v
    return v * model.delta ** T


def lambda_constant(cipher: CipherSpec, scenario: QuantumScenario) -> float:
    """Cost-time product Lambda (USD * years) of the parallel regime."""
    s = scenario.layers_per_year
    return (scenario.ccy_cost_usd * math.pi ** 2 * cipher.search_space
            * cipher.depth ** 2 / (16.0 * s * s))


def profit(cipher: CipherSpec, scenario: QuantumScenario, model: RewardModel,
           T: float) -> float:
    if T == 0:
        return 0.0
    return reward(model, T) - attack_plan(cipher, scenario, T).cost_usd


def interior_times(lam: float, v0: float, delta: float) -> list[tuple[float, str]]:
    """Stationary points of ``v0 * delta**T - lam / T`` on T > 0."""
    if not (0 < delta < 1) or v0 <= 0:
        return []
    ln_d = math.log(delta)
    c = lam / (v0 * -ln_d)
    arg = 0.5 * math.sqrt(c) * ln_d
    out = []
    for branch, label in ((0, "interior-W0"), (-1, "interior-W-1")):
        try:
            w = lambert_w(branch, arg)
        except NoRealSolution:
            return []
        T = 2.0 * w / ln_d
        if T > 0 and not any(T == t for t, _ in out):
            out.append((T, label))
    return out


@dataclass(frozen=True)
class ProfitProblem:
    """Profit as a function of completion time, in Lambda form.

    ``t_seq`` may be infinite for synthetic problems with no sequential floor.
    """

    lam: float
    model: RewardModel
    t_seq: float = math.inf

    def cost(self, T: float) -> float:
        return self.lam / min(T, self.t_seq)

    def profit(self, T: float) -> float:
        if T == 0:
            return 0.0
        return reward(self.model, T) - self.cost(T)

    def candidate_times(self) -> list[tuple[float, str]]:
        limit = min(self.t_seq, horizon_of(self.model))
        if not math.isfinite(limit):
            raise ValueError("profit has no maximiser: unbounded horizon and no sequential floor")
        times = [(0.0, "no-attack")]
        times.append((limit, "sequential" if limit == self.t_seq else "boundary"))
        if isinstance(self.model, Delta):
            for T, label in interior_times(self.lam, self.model.v0, self.model.delta):
                if T <= limit:
                    times.append((T, label))
        return times

    def solve(self) -> ProfitOutcome:
        cands = [Candidate(T, self.profit(T), label) for T, label in self.candidate_times()]
        best = cands[0]
        for c in cands[1:]:
            if c.profit_usd > best.profit_usd:
                best = c
        if best.profit_usd <= 0:
            return ProfitOutcome(False, None, 0.0, cands)
        return ProfitOutcome(True, best.time_years, best.profit_usd, cands)


def optimal_attack(cipher: CipherSpec, scenario: QuantumScenario,
                   model: RewardModel) -> ProfitOutcome:
    """Profit-maximising completion time, or the decision not to attack.

    Candidates are not attacking, finishing at min(T_seq, horizon), and the
    interior stationary points from both Lambert W branches that fall inside
    that window.  Zero profit counts as not attacking.
    """
    problem = ProfitProblem(lambda_constant(cipher, scenario), model,
                            sequential_time(cipher, scenario))
    return problem.solve()


def min_profitable_value(cipher: CipherSpec, scenario: QuantumScenario,
                         years: float, delta_pow: float) -> float:
    """Smallest v0 for which a ``years``-long attack breaks even.

    ``delta_pow`` is delta**years, the fraction of value left at the end.
    """
    if not 0 < delta_pow <= 1:
        raise ValueError(f"delta_pow must lie in (0, 1], got {delta_pow}")
    return attack_plan(cipher, scenario, years).cost_usd / delta_pow


def delta_from_pow(delta_pow: float, years: float) -> float:
    return delta_pow ** (1.0 / years)
