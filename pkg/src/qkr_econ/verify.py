"""Grover invariant suite used by ``qkr-econ grover-verify`` and the acceptance tests."""

from __future__ import annotations

import math

import numpy as np

from .grover import (GroverInstance, block_hit_probability, monte_carlo, optimal_iterations,
                     rotation_success_prob, statevector_grover)
from .report import Check, rel_check

EQUIV_TOL = 1e-9
MC_N = 2 ** 16
MC_TOTAL_TOL = 0.05
MC_SEQ_TOL = 0.10


def statevector_trace(n: int, targets, max_iterations: int) -> list[float]:
    """Target probability after 0..max_iterations rounds, from one simulation."""
    N = 1 << n
    idx = np.fromiter(targets, dtype=np.int64)
    amp = np.full(N, 1.0 / math.sqrt(N))
    probs = [float(np.sum(amp[idx] ** 2))]
    for _ in range(max_iterations):
        amp[idx] = -amp[idx]
        amp = 2.0 * amp.mean() - amp
        probs.append(float(np.sum(amp[idx] ** 2)))
    return probs


def statevector_equivalence(seed: int = 0, max_bits: int = 12) -> Check:
    rng = np.random.default_rng(seed)
    worst, cases = 0.0, 0
    for n in range(1, max_bits + 1):
        N = 1 << n
        for m in (1, 2, 4):
            if m > N:
                continue
            targets = rng.choice(N, size=m, replace=False)
            jmax = 2 * optimal_iterations(N, m)
            sim = statevector_trace(n, targets, jmax)
            for j, p in enumerate(sim):
                worst = max(worst, abs(p - rotation_success_prob(N, m, j)))
                cases += 1
    return Check("statevector==rotation", worst <= EQUIV_TOL,
                 detail=f"{cases} cases, max |diff|={worst:.2e} tol={EQUIV_TOL:g}")


def success_bound(min_bits: int = 4, max_bits: int = 24) -> Check:
    bad = []
    for n in range(min_bits, max_bits + 1):
        N = 1 << n
        p = rotation_success_prob(N, 1, optimal_iterations(N, 1))
        if p < 1 - 1 / N:
            bad.append(n)
    return Check(f"success>=1-1/N n={min_bits}..{max_bits}", not bad,
                 detail=f"failing n: {bad}" if bad else "all n")


def two_qubit_certainty() -> Check:
    p = statevector_grover(GroverInstance(2, frozenset({3}), 1))
    return Check("N=4 one iteration", p == 1.0, detail=f"p={p!r}")


def over_rotation(min_bits: int = 4, max_bits: int = 20) -> Check:
    bad = [n for n in range(min_bits, max_bits + 1)
           if rotation_success_prob(1 << n, 1, 2 * optimal_iterations(1 << n, 1))
           >= rotation_success_prob(1 << n, 1, optimal_iterations(1 << n, 1))]
    return Check("over-rotation lowers success", not bad, detail=f"failing n: {bad}" if bad else "all n")


def parallel_scaling(seed: int, trials: int, ks=(1, 4, 16, 64)) -> list[Check]:
    out = []
    for k in ks:
        s = monte_carlo(MC_N, k, 1, trials, seed)
        out.append(rel_check(f"mc/total_queries/k={k}", math.pi / 4 * math.sqrt(MC_N * k),
                             s.mean_total_queries, MC_TOTAL_TOL))
        out.append(rel_check(f"mc/sequential/k={k}", math.pi / 4 * math.sqrt(MC_N / k),
                             s.mean_sequential_queries, MC_TOTAL_TOL))
    return out


def batch_scaling(seed: int, trials: int, k: int = 16, ms=(1, 4, 16)) -> list[Check]:
    out = []
    runs = {m: monte_carlo(MC_N, k, m, trials, seed) for m in ms}
    base = runs[ms[0]].mean_sequential_queries * math.sqrt(ms[0])
    for m, s in runs.items():
        out.append(rel_check(f"mc/sequential/M={m}", math.pi / 4 * math.sqrt(MC_N / (k * m)),
                             s.mean_sequential_queries, MC_SEQ_TOL))
        out.append(rel_check(f"mc/sequential*sqrt(M)/M={m}", base,
                             s.mean_sequential_queries * math.sqrt(m), MC_SEQ_TOL))
        if m > 1:
            out.append(Check(f"mc/success>1/2/M={m}", s.success_rate > 0.5,
                             detail=f"success_rate={s.success_rate:.4f}"))
    return out


def block_hit_checks(max_bits: int = 20) -> list[Check]:
    exact = block_hit_probability(4, 2)
    bound = 1 - 1 / math.e
    low = [(1 << n, 1 << m) for n in range(2, max_bits + 1) for m in range(1, n)
           if block_hit_probability(1 << n, 1 << m) < bound]
    return [
        Check("block-hit(4,2)=5/6", abs(exact - 5 / 6) <= 1e-12, detail=f"p={exact!r}"),
        Check("block-hit>=1-1/e", not low, detail=f"violations: {low}" if low else "all (N, M)"),
    ]


def run_suite(seed: int = 0, trials: int = 10_000) -> list[Check]:
    return ([statevector_equivalence(seed), success_bound(), two_qubit_certainty(), over_rotation()]
            + parallel_scaling(seed, trials) + batch_scaling(seed, trials) + block_hit_checks())
