"""Speed vs maximum circuit-year price for a $1e8, 100-year AES-128 attack."""

import sys

from qkr_econ.feasibility import FeasibilityFamily, required_speed, tradeoff_curve
from qkr_econ.report import to_csv

fam = FeasibilityFamily(1e8, 100, 128, 57854)
s_total, hz = required_speed(fam.coefficient, 1000.0, 100)
print(f"# alpha={fam.coefficient:.4e}; $1000/CCY needs s_total={s_total:.4e} layers ({hz:.4e} Hz)",
      file=sys.stderr)
sys.stdout.write(to_csv(["gate_hz", "max_ccy_usd"], [list(r) for r in tradeoff_curve(fam, (1e9, 1e14), 60)]))
