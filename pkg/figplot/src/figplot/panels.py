"""Panel definitions: which CSV files feed which rendered image.

Mirrors the qdimer figure presets one-to-one, including the CSV naming
contract ``<preset>__q<q:g>__bj<b:g>.csv``.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def csv_name(preset: str, q: float, b_over_j: float) -> str:
    return f"{preset}__q{q:g}__bj{b_over_j:g}.csv"


@dataclass(frozen=True)
class Panel:
    """One rendered image of a preset."""

    suffix: str  # appended to the output stem; '' keeps the name as given
    kind: str  # 'T_map', 'T_map_zoom', 'S_vs_U', 'concurrence'
    title: str
    # (q, B/J) of the sweeps drawn in this panel, main curves
    sweeps: tuple[tuple[float, float], ...]
    reference: tuple[float, float] | None = None  # classical (q = 1) sweep
    xlim: tuple[float, float] | None = None
    ylim: tuple[float, float] | None = None
    extras: dict = field(default_factory=dict)


PANELS: dict[str, tuple[Panel, ...]] = {
    "fig1": tuple(
        Panel(
            suffix=chr(ord("a") + i),
            kind="T_map",
            title=f"q = {q:g}",
            sweeps=tuple((q, b) for b in (0.0, 1.0, 4.0)),
        )
        for i, q in enumerate((0.2, 0.6, 0.9))
    ),
    "fig2": (
        Panel(
            suffix="a",
            kind="T_map",
            title="q = 2",
            sweeps=tuple((2.0, b) for b in (0.5, 1.0, 2.5, 4.0)),
        ),
        Panel(
            suffix="b",
            kind="T_map",
            title="q = 2 (negative-temperature window)",
            sweeps=tuple((2.0, b) for b in (0.5, 1.0, 2.5, 4.0)),
            xlim=(2.0, 6.0),
            ylim=(-0.6, 1.2),
        ),
    ),
    "fig3a": (
        Panel(
            suffix="",
            kind="S_vs_U",
            title="q = 0.2, B/J = 1",
            sweeps=((0.2, 1.0),),
            reference=(1.0, 1.0),
        ),
    ),
    "fig3b": (
        Panel(
            suffix="",
            kind="T_map",
            title="q = 0.2, B/J = 1 (rejected points marked)",
            sweeps=((0.2, 1.0),),
        ),
    ),
    "fig3c": (
        Panel(
            suffix="",
            kind="S_vs_U",
            title="q = 2, B/J = 4",
            sweeps=((2.0, 4.0),),
            reference=(1.0, 4.0),
        ),
    ),
    "fig3d": (
        Panel(
            suffix="",
            kind="T_map",
            title="q = 2, B/J = 4 (rejected points marked)",
            sweeps=((2.0, 4.0),),
            ylim=(-1.0, 3.0),
        ),
    ),
    "fig4": tuple(
        Panel(
            suffix=chr(ord("a") + i),
            kind="concurrence",
            title=f"B/J = {b:g} (q < 1)",
            sweeps=tuple((q, b) for q in (0.2, 0.6, 0.9)),
        )
        for i, b in enumerate((0.0, 1.0, 1.2))
    ),
    "fig5": tuple(
        Panel(
            suffix=chr(ord("a") + i),
            kind="concurrence",
            title=f"B/J = {b:g} (1 < q <= 2)",
            sweeps=tuple((q, b) for q in (1.2, 1.5, 2.0)),
        )
        for i, b in enumerate((0.0, 1.0, 1.2))
    ),
    "fig6": tuple(
        Panel(
            suffix=chr(ord("a") + i),
            kind="concurrence",
            title=f"B/J = {b:g} (1 <= q <= 2.8)",
            sweeps=tuple((q, b) for q in (1.0, 1.6, 2.2, 2.8)),
        )
        for i, b in enumerate((0.0, 1.0, 1.2))
    ),
}
