"""CSV and JSON serialisation of comparison reports."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .verification import ComparisonReport

__all__ = ["CSV_COLUMNS", "format_real", "to_csv", "to_json", "write_report"]

CSV_COLUMNS = (
    "s", "T_x", "T_y", "T_z", "e1_x", "e1_y", "e1_z", "e2_x", "e2_y", "e2_z",
    "kappa_like_1", "kappa_like_2", "kappa_like_3",
    "err_spinor_vs_vector", "err_vs_analytic", "norm_drift", "theta", "theorem2_residual",
)


def format_real(x) -> str:
    """Shortest round-trip text for a float (at most 17 significant digits)."""
    return "" if x is None else repr(float(x))


def _row(r) -> list[str]:
    values = [r.s, *r.T, *r.e1, *r.e2, *r.kappa_like, r.err_spinor_vs_vector,
              r.err_vs_analytic, r.norm_drift, r.theta, r.theorem2_residual]
    return [format_real(v) for v in values]


def to_csv(report: ComparisonReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in report.records:
        writer.writerow(_row(r))
    return buf.getvalue()


def to_json(report: ComparisonReport) -> str:
    return json.dumps(report.to_dict(), indent=2, allow_nan=False) + "\n"


def write_report(report: ComparisonReport, path, fmt: str = "csv") -> Path:
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True)
    text = to_csv(report) if fmt == "csv" else to_json(report)
    with open(path, "w", newline="") as fh:
        fh.write(text)
    return path
