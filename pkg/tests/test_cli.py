import csv
import io
import math
import re

import pytest

from qkr_econ import core, presets
from qkr_econ.cli import main
from qkr_econ.core import CipherSpec
from qkr_econ.cost import attack_plan
from qkr_econ.reproduce import reproduce


def run(*argv):
    out = io.StringIO()
    rc = main(list(argv), out=out)
    return rc, out.getvalue()


def rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_cost_csv_is_exact_library_output():
    rc, text = run("cost", "--scenario", "mania", "--years", "100", "--format", "csv")
    assert rc == 0
    header, row = rows(text)
    assert header == ["scenario", "T_years", "t_layers", "k", "cost_ccy", "cost_usd"]
    plan = attack_plan(presets.AES128, presets.MANIA, 100)
    assert row[0] == "mania"
    assert [float(x) for x in row[2:]] == [plan.layer_budget, plan.parallelism, plan.cost_ccy, plan.cost_usd]


@pytest.mark.parametrize("scenario, years, usd", [
    ("mania", "100", 9.810e10), ("optimistic", "10", 3.532e16), ("steady", "1", 3.532e21),
])
def test_cost_rows_match_tables(scenario, years, usd):
    _, text = run("cost", "--scenario", scenario, "--years", years, "--format", "csv")
    assert float(rows(text)[1][5]) == pytest.approx(usd, rel=5e-3)


def test_csv_is_locale_independent():
    _, text = run("cost", "--format", "csv")
    assert "\r" not in text
    for row in rows(text)[1:]:
        for cell in row[1:]:
            assert re.fullmatch(r"-?\d\.\d{16}e[+-]\d+", cell), cell


def test_table_format_default():
    rc, text = run("cost")
    assert rc == 0 and "mania" in text and "9.8227e+10" in text


def test_reproduce_passes():
    rc, text = run("reproduce")
    assert rc == 0
    assert text.strip().endswith("45/45 checks passed")
    assert "[FAIL]" not in text


def test_reproduce_fails_with_perturbed_depth(monkeypatch):
    deeper = CipherSpec("d+1%", 128, round(57894 * 1.01), 1000)
    checks = {c.name: c for c in reproduce(deeper)}
    k = checks["threshold/100y/mania/k"]
    assert not k.passed and k.rel_err == pytest.approx(0.02, abs=0.003)
    assert checks["threshold/100y/mania/t"].passed


def test_reproduce_fails_with_other_year_length(monkeypatch):
    monkeypatch.setattr(core, "YEAR_SECONDS", 365.25 * 86400 * 1.01)
    checks = {c.name: c for c in reproduce()}
    assert not checks["threshold/100y/optimistic/t"].passed
    rc, _ = run("reproduce")
    assert rc == 2


def test_min_value_curve():
    _, text = run("curve", "min-value", "--scenario", "mania", "--years", "100", "--points", "50",
                  "--format", "csv")
    table = rows(text)
    assert table[0] == ["delta_pow", "v_min_usd"]
    assert len(table) == 51
    assert float(table[1][0]) == 0.01
    assert float(table[1][1]) == pytest.approx(9.81e12, rel=5e-3)
    assert float(table[-1][0]) == 1.0
    assert float(table[-1][1]) == attack_plan(presets.AES128, presets.MANIA, 100).cost_usd
    const = [float(x) * float(v) for x, v in table[1:]]
    assert all(c == pytest.approx(const[0], rel=1e-12) for c in const)


def test_feasibility_curve():
    _, text = run("curve", "feasibility", "--budget", "1e8", "--years", "100", "--cipher",
                  "aes128-d57854", "--range", "8.403e12", "1e14", "--points", "10", "--format", "csv")
    table = rows(text)
    assert table[0] == ["gate_hz", "max_ccy_usd"]
    assert float(table[1][0]) == pytest.approx(8.403e12)
    assert float(table[1][1]) == pytest.approx(1000, rel=1e-2)


def test_optimize_commands():
    rc, text = run("optimize", "--value", "1e12", "--threshold", "100")
    assert rc == 0 and "attack(T=100y)" in text
    rc, text = run("optimize", "--value", "1e6", "--delta-pow", "0.5", "--years", "10")
    assert rc == 0 and "no-attack" in text
    rc, text = run("optimize", "--value", "1e30")
    assert "sequential" in text


def test_batch_prints_both_costs():
    rc, text = run("batch", "--batch-m", "1000000", "--format", "csv")
    assert rc == 0
    table = rows(text.split("note:")[0])
    header, row = table[0], table[1]
    assert "formula_cost_usd" in header and "sqrt_m_heuristic_cost_usd" in header
    assert float(row[header.index("sqrt_m_heuristic_cost_usd")]) == pytest.approx(9.81e7, rel=5e-3)
    assert "disagree" in text


def test_classical_command():
    _, text = run("classical", "--format", "csv")
    table = rows(text)
    assert float(table[1][2]) == pytest.approx(9.24e29, rel=5e-3)
    assert table[2][0] == "strict-units"


def test_grover_verify_small():
    rc, text = run("grover-verify", "--seed", "3", "--trials", "300")
    assert rc == 0, text
    assert "[FAIL]" not in text


def test_config_scenario_used(tmp_path):
    p = tmp_path / "c.ini"
    p.write_text("[scenario lab]\ngate_speed_hz = 1e6\nccy_cost_usd = 1e6\n")
    rc, text = run("cost", "--config", str(p), "--scenario", "lab", "--years", "1", "--format", "csv")
    assert rc == 0 and rows(text)[1][0] == "lab"


def test_error_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.ini"
    bad.write_text("oops\n")
    assert run("cost", "--config", str(bad))[0] == 1
    assert run("cost", "--scenario", "atlantis")[0] == 1
    assert run("optimize")[0] == 1
    assert run("curve", "min-value", "--range", "0.5", "2")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["cost", "--format", "xml"])
    assert exc.value.code == 1
