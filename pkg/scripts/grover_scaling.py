"""Monte Carlo sweep of partitioned Grover search: queries vs buckets and batch size."""

import argparse
import math

from qkr_econ.grover import monte_carlo
from qkr_econ.report import to_table

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--bits", type=int, default=16)
ap.add_argument("--trials", type=int, default=10_000)
ap.add_argument("--seed", type=int, default=0)
args = ap.parse_args()
N = 1 << args.bits

rows = []
for k in (1, 4, 16, 64):
    for M in (1, 4, 16):
        s = monte_carlo(N, k, M, args.trials, args.seed)
        rows.append([k, M, s.mean_total_queries, math.pi / 4 * math.sqrt(N * k / M),
                     s.mean_sequential_queries, math.pi / 4 * math.sqrt(N / (k * M)), s.success_rate])
print(to_table(["k", "M", "total", "(pi/4)sqrt(Nk/M)", "sequential", "(pi/4)sqrt(N/kM)", "success"], rows))
