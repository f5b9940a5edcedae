"""Print the threshold-reward cost tables (AES-128, d = 57894) for 100/10/1-year deadlines."""

import sys

from qkr_econ import presets
from qkr_econ.cost import attack_plan
from qkr_econ.report import to_table

for years in (100, 10, 1):
    rows = []
    for sc in presets.SCENARIOS.values():
        p = attack_plan(presets.AES128, sc, years)
        rows.append([sc.name, p.layer_budget, p.parallelism, p.cost_ccy, p.cost_usd])
    sys.stdout.write(f"\n{years}-year attack\n")
    sys.stdout.write(to_table(["scenario", "t_layers", "k", "cost_ccy", "cost_usd"], rows))
