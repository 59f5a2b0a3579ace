"""Matplotlib rendering of the panel kinds.

Output is deterministic: fixed SVG hash salt, no date metadata, and the
input CSVs are only ever read.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "figplot"

import matplotlib.pyplot as plt
import numpy as np

from .panels import PANELS, Panel, csv_name
from .reading import SchemaError, load_sweep, split_physical

_SERIES_COLORS = ("tab:blue", "tab:green", "tab:orange", "tab:purple", "tab:brown")


def _save(fig, out: Path) -> None:
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, format="svg", metadata={"Date": None})
    plt.close(fig)


def _temperature_map(panel: Panel, preset: str, csv_dir: Path, out: Path) -> None:
    fig, ax = plt.subplots(figsize=(4.6, 3.6))
    t_star_max = 0.0
    for color, (q, b) in zip(_SERIES_COLORS, panel.sweeps):
        data = load_sweep(csv_dir / csv_name(preset, q, b))
        physical, rejected = split_physical(data)
        ax.plot(
            data["t_star"][physical],
            data["T_physical"][physical],
            ".",
            ms=3,
            color=color,
            label=f"q={q:g}, B/J={b:g}",
        )
        ax.plot(
            data["t_star"][rejected],
            data["T_physical"][rejected],
            "*",
            ms=4,
            color="black",
            mew=0.3,
            label="_rejected",
        )
        t_star_max = max(t_star_max, float(np.nanmax(data["t_star"])))
    ident = np.linspace(0.0, t_star_max, 2)
    ax.plot(ident, ident, "--", color="red", lw=1, label="T = T*")
    ax.set_xlabel("T*/J")
    ax.set_ylabel("T/J")
    ax.set_title(panel.title)
    if panel.xlim:
        ax.set_xlim(*panel.xlim)
    if panel.ylim:
        ax.set_ylim(*panel.ylim)
    ax.legend(fontsize=7, loc="best")
    _save(fig, out)


def _s_vs_u(panel: Panel, preset: str, csv_dir: Path, out: Path) -> None:
    fig, ax = plt.subplots(figsize=(4.6, 3.6))
    (q, b) = panel.sweeps[0]
    data = load_sweep(csv_dir / csv_name(preset, q, b))
    physical, rejected = split_physical(data)
    ax.plot(
        data["U"][physical],
        data["S"][physical],
        "s",
        ms=3,
        color="tab:green",
        label=f"physical (q={q:g})",
    )
    rej_pos = rejected & (data["beta"] > 0.0)
    rej_neg = rejected & (data["beta"] < 0.0)
    ax.plot(data["U"][rej_pos], data["S"][rej_pos], "*", ms=5, color="black",
            label="rejected, T > 0")
    if np.any(rej_neg):
        ax.plot(data["U"][rej_neg], data["S"][rej_neg], "*", ms=5, color="magenta",
                label="rejected, T < 0")
    # second-constraint curve of the same sweep: S against U2
    ax.plot(data["U2"][physical], data["S"][physical], "-", lw=1, color="tab:blue",
            label="second-constraint (U2) curve")
    if panel.reference is not None:
        ref = load_sweep(csv_dir / csv_name(preset, *panel.reference))
        ref_phys, _ = split_physical(ref)
        ax.plot(ref["U"][ref_phys], ref["S"][ref_phys], "-", lw=1, color="red",
                label="classical (q = 1)")
    ax.set_xlabel("U/J")
    ax.set_ylabel("S")
    ax.set_title(panel.title)
    if panel.xlim:
        ax.set_xlim(*panel.xlim)
    if panel.ylim:
        ax.set_ylim(*panel.ylim)
    ax.legend(fontsize=7, loc="best")
    _save(fig, out)


def _concurrence(panel: Panel, preset: str, csv_dir: Path, out: Path) -> None:
    fig, ax = plt.subplots(figsize=(4.6, 3.6))
    gb_drawn = False
    for color, (q, b) in zip(_SERIES_COLORS, panel.sweeps):
        data = load_sweep(csv_dir / csv_name(preset, q, b))
        physical, _ = split_physical(data)
        ax.plot(data["t_star"], data["C_varrho"], "--", lw=1, color=color,
                label=f"C_vr q={q:g}")
        ax.plot(
            data["T_physical"][physical],
            data["C_rho_closed"][physical],
            "-",
            lw=1.2,
            color=color,
            label=f"C_rho q={q:g}",
        )
        if not gb_drawn:
            ax.plot(data["t_star"], data["C_gb"], ":", lw=1.4, color="black",
                    label="classical")
            gb_drawn = True
    ax.set_xlabel("T/J  (T*/J for C_vr)")
    ax.set_ylabel("concurrence")
    ax.set_xlim(0.0, float(np.nanmax(load_sweep(
        csv_dir / csv_name(preset, *panel.sweeps[0]))["t_star"])))
    ax.set_ylim(-0.02, 1.02)
    ax.set_title(panel.title)
    ax.legend(fontsize=7, loc="best")
    _save(fig, out)


_RENDERERS = {
    "T_map": _temperature_map,
    "S_vs_U": _s_vs_u,
    "concurrence": _concurrence,
}


def output_paths(preset: str, out: Path) -> list[Path]:
    """One output file per panel: suffixes inserted before the extension."""
    out = Path(out)
    paths = []
    for panel in PANELS[preset]:
        if panel.suffix:
            paths.append(out.with_name(f"{out.stem}_{panel.suffix}{out.suffix or '.svg'}"))
        else:
            paths.append(out if out.suffix else out.with_suffix(".svg"))
    return paths


def render(preset: str, csv_dir: Path, out: Path) -> list[Path]:
    """Render every panel of ``preset`` from CSVs in ``csv_dir``.

    Returns the written paths.  Raises :class:`SchemaError` for missing or
    malformed input; input files are never modified.
    """
    if preset not in PANELS:
        raise SchemaError(f"unknown preset {preset!r}")
    written = []
    for panel, path in zip(PANELS[preset], output_paths(preset, Path(out))):
        _RENDERERS[panel.kind](panel, preset, Path(csv_dir), path)
        written.append(path)
    return written
