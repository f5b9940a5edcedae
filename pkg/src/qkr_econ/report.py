"""Check records and locale-independent number formatting."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    expected: float | None = None
    actual: float | None = None
    tolerance: float | None = None
    detail: str = ""

    @property
    def rel_err(self) -> float | None:
        if self.expected is None or self.actual is None or self.expected == 0:
            return None
        return abs(self.actual - self.expected) / abs(self.expected)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        if self.expected is not None and self.actual is not None:
            body = (f"expected={fmt(self.expected)} actual={fmt(self.actual)} "
                    f"rel_err={self.rel_err:.2e} tol={self.tolerance:g}")
        else:
            body = self.detail
        return f"[{status}] {self.name}: {body}".rstrip()


def rel_check(name: str, expected: float, actual: float, tol: float) -> Check:
    ok = math.isfinite(actual) and abs(actual - expected) <= tol * abs(expected)
    return Check(name, ok, expected, actual, tol)


def fmt(x: float) -> str:
    """Short human form, five significant digits."""
    return f"{x:.4e}"


def fmt_exact(x: float) -> str:
    """Round-trippable scientific notation (17 significant digits)."""
    return f"{float(x):.16e}"


def to_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt_exact(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def to_table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[fmt(v) if isinstance(v, float) else str(v) for v in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
