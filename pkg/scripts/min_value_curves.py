"""Minimum profitable plaintext value vs remaining value fraction, quantum mania.

Writes one CSV per deadline into the output directory (default: current dir).
"""

import argparse
from pathlib import Path

import numpy as np

from qkr_econ import presets
from qkr_econ.report import to_csv
from qkr_econ.strategy import min_profitable_value

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--out", type=Path, default=Path("."))
ap.add_argument("--points", type=int, default=100)
args = ap.parse_args()
args.out.mkdir(parents=True, exist_ok=True)

for years in (100, 10, 1):
    xs = np.linspace(0.01, 1.0, args.points)
    rows = [[float(x), min_profitable_value(presets.AES128, presets.MANIA, years, float(x))] for x in xs]
    path = args.out / f"min_value_{years}y.csv"
    path.write_text(to_csv(["delta_pow", "v_min_usd"], rows))
    print(f"{path}: v_min at delta_pow=1 is {rows[-1][1]:.4e}")
