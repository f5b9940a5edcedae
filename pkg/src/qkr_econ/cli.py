"""Command-line entry point: ``qkr-econ <command> [options]``.

Exit codes: 0 success, 1 validation or parse error, 2 check failure.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import presets
from .batch import BatchSpec, compare_batch_costs
from .classical import ClassicalRig, classical_expected_cost, per_guess_cost
from .config import ConfigError, load_config
from .cost import attack_plan, sequential_time
from .feasibility import FeasibilityFamily, tradeoff_curve
from .report import fmt, to_csv, to_table
from .reproduce import reproduce
from .strategy import Constant, Delta, Threshold, delta_from_pow, optimal_attack
from .verify import run_suite

COST_HEADER = ["scenario", "T_years", "t_layers", "k", "cost_ccy", "cost_usd"]
STANDARD_SCENARIOS = ["mania", "optimistic", "steady"]


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(args, header, rows, out):
    out.write(to_csv(header, rows) if args.format == "csv" else to_table(header, rows))


def cmd_cost(args, cfg, out):
    cipher = cfg.cipher(args.cipher)
    names = args.scenario or STANDARD_SCENARIOS
    years = args.years or [100.0, 10.0, 1.0]
    rows = []
    for y in years:
        for name in names:
            plan = attack_plan(cipher, cfg.scenario(name), y)
            rows.append([name, float(y), plan.layer_budget, plan.parallelism,
                         plan.cost_ccy, plan.cost_usd])
    _emit(args, COST_HEADER, rows, out)
    return 0


def cmd_reproduce(args, cfg, out):
    checks = reproduce(cfg.cipher(args.cipher or presets.DEFAULT_CIPHER))
    for c in checks:
        out.write(c.line() + "\n")
    failed = sum(not c.passed for c in checks)
    out.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
    return 2 if failed else 0


def cmd_curve(args, cfg, out):
    points = args.points
    if points < 2:
        raise UsageError("--points must be >= 2")
    if args.kind == "min-value":
        cipher, scenario = cfg.cipher(args.cipher), cfg.scenario(_one(args.scenario))
        years = _one(args.years, 100.0)
        lo, hi = args.range or (0.01, 1.0)
        if not 0 < lo < hi <= 1:
            raise UsageError("min-value range must satisfy 0 < lo < hi <= 1")
        base = attack_plan(cipher, scenario, years).cost_usd
        xs = [float(x) for x in np.geomspace(lo, hi, points)]
        xs[0], xs[-1] = lo, hi
        rows = [[x, base / x] for x in xs]
        _emit(args, ["delta_pow", "v_min_usd"], rows, out)
    else:
        cipher = cfg.cipher(args.cipher or "aes128-d57854")
        budget = args.budget if args.budget is not None else 1e8
        years = _one(args.years, 100.0)
        fam = FeasibilityFamily(budget, years, cipher.key_bits, cipher.depth)
        lo, hi = args.range or (1e9, 1e14)
        if not 0 < lo < hi:
            raise UsageError("feasibility range must satisfy 0 < lo < hi")
        rows = [list(r) for r in tradeoff_curve(fam, (lo, hi), points)]
        _emit(args, ["gate_hz", "max_ccy_usd"], rows, out)
    return 0


def cmd_optimize(args, cfg, out):
    cipher, scenario = cfg.cipher(args.cipher), cfg.scenario(_one(args.scenario))
    if args.value is None:
        raise UsageError("--value is required")
    horizon = args.threshold if args.threshold is not None else math.inf
    if args.delta_pow is not None:
        if not 0 < args.delta_pow <= 1:
            raise UsageError("--delta-pow must lie in (0, 1]")
        years = _one(args.years, 1.0)
        model = Delta(args.value, delta_from_pow(args.delta_pow, years), horizon)
    elif math.isfinite(horizon):
        model = Threshold(args.value, horizon)
    else:
        model = Constant(args.value)
    res = optimal_attack(cipher, scenario, model)
    out.write(f"model: {model}\n")
    out.write(f"T_seq_years: {fmt(sequential_time(cipher, scenario))}\n")
    out.write(f"decision: {res.decision}\n")
    out.write(f"profit_usd: {fmt(res.profit_usd)}\n")
    rows = [[c.label, c.time_years, c.profit_usd] for c in res.candidates]
    _emit(args, ["candidate", "T_years", "profit_usd"], rows, out)
    return 0


def cmd_batch(args, cfg, out):
    cipher, scenario = cfg.cipher(args.cipher), cfg.scenario(_one(args.scenario))
    years = _one(args.years, 100.0)
    m = args.batch_m if args.batch_m is not None else 1
    cmp = compare_batch_costs(BatchSpec(m, cipher), scenario, years)
    rows = [[m, float(cmp.oracle_depth), cmp.single_cost_usd, cmp.formula_cost_usd,
             cmp.sqrt_heuristic_cost_usd]]
    _emit(args, ["M", "oracle_depth", "single_key_cost_usd", "formula_cost_usd",
                 "sqrt_m_heuristic_cost_usd"], rows, out)
    if m > 1:
        out.write(f"note: sqrt(M) heuristic / formula = {cmp.discrepancy:.4g}; "
                  "the two estimates disagree, neither is preferred\n")
    return 0


def cmd_classical(args, cfg, out):
    rig = ClassicalRig()
    n = cfg.cipher(args.cipher).key_bits
    rows = [["formula-as-published", per_guess_cost(rig), classical_expected_cost(rig, n)],
            ["strict-units", per_guess_cost(rig, True), classical_expected_cost(rig, n, True)]]
    _emit(args, ["variant", "usd_per_guess", "expected_cost_usd"], rows, out)
    return 0


def cmd_grover_verify(args, cfg, out):
    checks = run_suite(seed=args.seed, trials=args.trials)
    for c in checks:
        out.write(c.line() + "\n")
    failed = sum(not c.passed for c in checks)
    out.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
    return 2 if failed else 0


def _one(values, default=None):
    if not values:
        return default
    if len(values) > 1:
        raise UsageError("this command takes a single value for that option")
    return values[0]


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="INI file with extra scenarios/ciphers")
    common.add_argument("--scenario", action="append", metavar="NAME")
    common.add_argument("--cipher", metavar="NAME")
    common.add_argument("--years", action="append", type=float, metavar="T")
    common.add_argument("--value", type=float, metavar="V0")
    common.add_argument("--delta-pow", type=float, metavar="X")
    common.add_argument("--threshold", type=float, metavar="T_PRIME")
    common.add_argument("--budget", type=float, metavar="B")
    common.add_argument("--batch-m", type=int, metavar="M")
    common.add_argument("--seed", type=int, default=0, metavar="S")
    common.add_argument("--format", choices=["table", "csv"], default="table")

    p = _Parser(prog="qkr-econ", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("cost", parents=[common], help="parallelism and cost per scenario/deadline")
    sub.add_parser("reproduce", parents=[common], help="check every golden value")
    c = sub.add_parser("curve", parents=[common], help="emit a curve as CSV or table")
    c.add_argument("kind", choices=["min-value", "feasibility"])
    c.add_argument("--points", type=int, default=50)
    c.add_argument("--range", type=float, nargs=2, metavar=("LO", "HI"))
    sub.add_parser("optimize", parents=[common], help="attacker-optimal completion time")
    sub.add_parser("batch", parents=[common], help="m-to-1 batch attack cost")
    sub.add_parser("classical", parents=[common], help="classical brute-force cost")
    g = sub.add_parser("grover-verify", parents=[common], help="run the Grover invariant suite")
    g.add_argument("--trials", type=int, default=10_000)
    return p


COMMANDS = {
    "cost": cmd_cost, "reproduce": cmd_reproduce, "curve": cmd_curve,
    "optimize": cmd_optimize, "batch": cmd_batch, "classical": cmd_classical,
    "grover-verify": cmd_grover_verify,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        return COMMANDS[args.command](args, cfg, out)
    except (ConfigError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
