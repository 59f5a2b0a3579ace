"""Read-only access to qdimer sweep CSV files.

The schema contract: a header row with at least the columns in
:data:`REQUIRED_COLUMNS`, one row per grid node, numeric cells with the
literal token ``NaN`` for non-evaluable entries.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

import numpy as np

REQUIRED_COLUMNS = (
    "t_star",
    "beta_star",
    "beta",
    "T_physical",
    "Z",
    "trace_q",
    "U2",
    "U",
    "S",
    "F",
    "physical",
    "branch_id",
    "C_varrho",
    "C_rho_closed",
    "C_rho_oracle",
    "C_gb",
)


class SchemaError(RuntimeError):
    """CSV file missing, empty, or not matching the sweep schema."""


def load_sweep(path: Path) -> dict[str, np.ndarray]:
    """Columns of one sweep CSV as float arrays (NaN preserved).

    Raises
    ------
    SchemaError
        If the file is missing, has no data rows, or lacks required columns.
    """
    path = Path(path)
    if not path.is_file():
        raise SchemaError(f"sweep file not found: {path}")
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"empty CSV (no header): {path}") from None
        missing = [c for c in REQUIRED_COLUMNS if c not in header]
        if missing:
            raise SchemaError(f"{path} lacks required columns {missing}")
        rows = list(reader)
    if not rows:
        raise SchemaError(f"no data rows in {path}")
    idx = {name: header.index(name) for name in header}
    out: dict[str, np.ndarray] = {}
    for name in header:
        col = []
        for row in rows:
            cell = row[idx[name]]
            col.append(math.nan if cell == "NaN" else float(cell))
        out[name] = np.asarray(col)
    return out


def split_physical(data: dict[str, np.ndarray]):
    """(physical, rejected-but-evaluable) boolean masks."""
    evaluable = ~np.isnan(data["beta"])
    physical = (data["physical"] == 1.0) & evaluable
    rejected = evaluable & ~physical
    return physical, rejected
