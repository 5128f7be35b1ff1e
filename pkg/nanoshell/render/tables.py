from __future__ import annotations

import csv
import io
import json
import math
import sys
from typing import Any, Iterable, List, Mapping, Optional, Sequence

from nanoshell.torsion import SweepRecord

SWEEP_HEADER = (
    "n",
    "m",
    "psi_rad",
    "rho0_nm",
    "torsion_angle_rad_per_nm",
    "torsion_stiffness_nN_nm2",
    "axial_strain",
)


def fmt_float(value: Optional[float]) -> str:
    """12 значущих цифр; −0 друкується як 0, NaN — порожньо."""
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return ""
    return f"{float(value) + 0.0:.12g}"


def _sweep_cells(rec: SweepRecord) -> List[str]:
    return [
        str(rec.n),
        str(rec.m),
        fmt_float(rec.psi),
        fmt_float(rec.rho0),
        fmt_float(rec.torsion_angle),
        fmt_float(rec.torsion_stiffness),
        fmt_float(rec.axial_strain),
    ]


def sweep_csv(records: Sequence[SweepRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    with_errors = any(r.error for r in records)
    writer.writerow(list(SWEEP_HEADER) + (["error"] if with_errors else []))
    for rec in records:
        writer.writerow(_sweep_cells(rec) + ([rec.error or ""] if with_errors else []))
    return buf.getvalue()


def field_csv(x: Iterable[float], w: Iterable[float], a1: Iterable[float], a2: Iterable[float]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x1_nm", "w_nm", "a1_nm", "a2_nm"])
    for row in zip(x, w, a1, a2):
        writer.writerow([fmt_float(v) for v in row])
    return buf.getvalue()


def to_json(doc: Mapping[str, Any]) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False, sort_keys=False) + "\n"


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def emit(text: str, path: Optional[str] = None) -> None:
    """Пише у файл або в stdout."""
    if path:
        write_text(path, text)
    else:
        sys.stdout.write(text)
