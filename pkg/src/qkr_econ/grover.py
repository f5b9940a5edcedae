"""Small-scale Grover search: exact rotation model, statevector, partitioned search.

These check the query-count constants the cost model relies on: the
(pi/4)*sqrt(N) iteration count, the sqrt(k) parallel overhead, and the
sqrt(N/(kM)) sequential time of the m-to-1 block search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

MAX_STATEVECTOR_BITS = 16


class ResourceLimitError(ValueError):
    pass


@dataclass(frozen=True)
class GroverInstance:
    space_bits: int
    targets: frozenset[int]
    iterations: int
    buckets: int = 1

    def __post_init__(self):
        object.__setattr__(self, "targets", frozenset(self.targets))
        if not self.targets:
            raise ValueError("need at least one target")
        if any(not 0 <= t < 2 ** self.space_bits for t in self.targets):
            raise ValueError("targets must lie in [0, 2**space_bits)")
        if self.iterations < 0 or self.buckets < 1:
            raise ValueError("iterations must be >= 0 and buckets >= 1")


def rotation_success_prob(N: int, targets: int, iterations: int) -> float:
    """sin^2((2j+1) theta) with theta = arcsin(sqrt(M/N))."""
    if not 1 <= targets <= N:
        raise ValueError(f"need 1 <= targets <= N, got {targets}, {N}")
    if iterations < 0:
        raise ValueError("iterations must be >= 0")
    theta = math.asin(math.sqrt(targets / N))
    return math.sin((2 * iterations + 1) * theta) ** 2


def optimal_iterations(N: int, targets: int = 1) -> int:
    if not 1 <= targets <= N:
        raise ValueError(f"need 1 <= targets <= N, got {targets}, {N}")
    return math.floor(math.pi / 4 * math.sqrt(N / targets))


def statevector_grover(instance: GroverInstance) -> float:
    """Probability of measuring a target after ``instance.iterations`` rounds.

    Amplitudes stay real, so a float vector is enough.
    """
    n = instance.space_bits
    if n > MAX_STATEVECTOR_BITS:
        raise ResourceLimitError(f"statevector limited to {MAX_STATEVECTOR_BITS} bits, got {n}")
    N = 1 << n
    amp = np.full(N, 1.0 / math.sqrt(N))
    idx = np.fromiter(instance.targets, dtype=np.int64)
    for _ in range(instance.iterations):
        amp[idx] = -amp[idx]                 # phase oracle
        amp = 2.0 * amp.mean() - amp         # inversion about the mean
    return float(np.sum(amp[idx] ** 2))


@dataclass(frozen=True)
class TrialResult:
    success: bool
    total_queries: int
    sequential_queries: int


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream per (seed, trial), so trials can run in any order."""
    return np.random.default_rng([seed, trial])


def partitioned_search_trial(N: int, buckets: int, targets: int,
                             rng: np.random.Generator) -> TrialResult:
    """One run of k-parallel Grover search for any of ``targets`` marked items.

    With more than one target the space is cut into ``targets`` blocks, one
    block is picked at random and split into ``buckets`` parts; each part runs
    the single-target iteration count.  Success is sampled per bucket from the
    rotation model.  Buckets are padded to equal size when k does not divide.
    """
    if buckets < 1 or not 1 <= targets <= N:
        raise ValueError("need buckets >= 1 and 1 <= targets <= N")
    marked = rng.choice(N, size=targets, replace=False)
    block = -(-N // targets)
    lo = int(rng.integers(targets)) * block if targets > 1 else 0
    size = -(-block // buckets)
    in_block = marked[(marked >= lo) & (marked < lo + block)]
    counts = np.bincount((in_block - lo) // size, minlength=buckets)
    j = optimal_iterations(size, 1)
    p = np.array([rotation_success_prob(size, int(m), j) if m else 0.0 for m in counts])
    success = bool(np.any(rng.random(buckets) < p))
    return TrialResult(success, buckets * j, j)


@dataclass(frozen=True)
class MonteCarloSummary:
    N: int
    buckets: int
    targets: int
    trials: int
    success_rate: float
    mean_total_queries: float
    mean_sequential_queries: float


def monte_carlo(N: int, buckets: int, targets: int, trials: int, seed: int) -> MonteCarloSummary:
    results = [partitioned_search_trial(N, buckets, targets, trial_rng(seed, i))
               for i in range(trials)]
    return MonteCarloSummary(
        N, buckets, targets, trials,
        success_rate=sum(r.success for r in results) / trials,
        mean_total_queries=sum(r.total_queries for r in results) / trials,
        mean_sequential_queries=sum(r.sequential_queries for r in results) / trials,
    )


def block_hit_probability(N: int, M: int) -> float:
    """P(a fixed block of size N/M holds at least one of M random targets).

    Exact hypergeometric tail 1 - C(N - N/M, M) / C(N, M), in log space.
    """
    if not 1 <= M <= N or N % M:
        raise ValueError("need 1 <= M <= N with M dividing N")
    rest = N - N // M
    if rest < M:
        return 1.0
    # log C(rest, M) - log C(N, M) = sum_i log((rest - i) / (N - i))
    i = np.arange(M, dtype=np.float64)
    log_miss = float(np.sum(np.log1p(-(N // M) / (N - i))))
    return -math.expm1(log_miss)


def success_probs(N: int, targets: int, iterations: Iterable[int]) -> list[float]:
    return [rotation_success_prob(N, targets, j) for j in iterations]
