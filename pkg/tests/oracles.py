"""Brute-force references, kept independent of the library's code paths."""

import math

import numpy as np


def grid_profit(lam, v0, delta, horizon, t_seq=math.inf, step=1e-4):
    """Max of v0*delta**T - lam/min(T, t_seq) over T in (0, min(horizon, t_seq)].

    Returns (best_T, best_profit) with best_T = 0 when nothing beats not attacking.
    """
    limit = min(horizon, t_seq)
    T = np.arange(1, int(math.floor(limit / step)) + 1, dtype=np.float64) * step
    if T.size == 0 or T[-1] < limit:
        T = np.append(T, limit)
    P = v0 * np.power(delta, T) - lam / np.minimum(T, t_seq)
    i = int(np.argmax(P))
    if P[i] <= 0:
        return 0.0, 0.0
    return float(T[i]), float(P[i])


def random_draws(seed, count):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        lam = 10 ** rng.uniform(-4, 4)
        v0 = 10 ** rng.uniform(-2, 6)
        delta = rng.uniform(0.01, 0.999)
        horizon = rng.uniform(0.1, 200)
        yield lam, v0, delta, horizon
