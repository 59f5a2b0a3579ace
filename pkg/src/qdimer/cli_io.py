"""CSV schema and deterministic rendering of sweep results.

One row per grid node, ascending pseudo temperature.  All numeric cells
use 17 significant digits so identical runs are byte-identical;
non-evaluable cells carry the literal token ``NaN`` to keep the grid
aligned for plotting.

Concurrence cells always evaluate the state strictly (no past-pole
continuation): nodes outside the ordinary q-exponential domain, where no
positive-semidefinite state exists, report NaN concurrence even when the
thermodynamic columns are filled by a continued sweep.

Column semantics:

* ``C_varrho``     - pseudo-temperature closed form (unrooted weight
                     product) at the node's b*, wherever the state exists.
* ``C_rho_closed`` - the same closed form, reported only on retained
                     physical nodes; its temperature axis is T_physical.
* ``C_rho_oracle`` - spin-flip eigenvalue concurrence of the node's
                     state (the rooted-product value), wherever the state
                     exists.
* ``C_gb``         - classical reference curve evaluated at beta = 1/t_star.
"""

from __future__ import annotations

import math

from .dimer import thermal_state
from .entanglement import concurrence_gb, concurrence_oracle, concurrence_varrho
from .errors import QDimerError
from .thermo import SweepResult

COLUMNS = (
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


def format_cell(x: float) -> str:
    """17-significant-digit decimal, or the literal NaN token."""
    if not math.isfinite(x):
        return "NaN"
    return format(x, ".17g")


def sweep_rows(sweep: SweepResult) -> list[list[str]]:
    """All CSV rows of a (preferably filtered) sweep, ascending t_star."""
    p, q = sweep.params, sweep.q
    rows = []
    for pt in reversed(sweep.points):
        try:
            c_varrho = concurrence_varrho(p, q, pt.beta_star) if pt.ok else math.nan
        except QDimerError:
            c_varrho = math.nan
        c_rho_closed = c_varrho if pt.physical else math.nan
        try:
            c_oracle = concurrence_oracle(thermal_state(p, q, pt.beta_star)) if pt.ok else math.nan
        except QDimerError:
            c_oracle = math.nan
        c_gb = concurrence_gb(p, 1.0 / pt.t_star) if pt.t_star > 0.0 else math.nan
        rows.append(
            [
                format_cell(pt.t_star),
                format_cell(pt.beta_star),
                format_cell(pt.beta),
                format_cell(pt.T_physical),
                format_cell(pt.Z),
                format_cell(pt.trace_q),
                format_cell(pt.u2),
                format_cell(pt.U),
                format_cell(pt.S),
                format_cell(pt.F),
                "1" if pt.physical else "0",
                str(pt.branch_id),
                format_cell(c_varrho),
                format_cell(c_rho_closed),
                format_cell(c_oracle),
                format_cell(c_gb),
            ]
        )
    return rows


def render_csv(sweep: SweepResult) -> str:
    """Complete CSV text (header + rows, comma separated, LF newlines)."""
    lines = [",".join(COLUMNS)]
    lines.extend(",".join(row) for row in sweep_rows(sweep))
    return "\n".join(lines) + "\n"


def write_csv(sweep: SweepResult, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_csv(sweep))
