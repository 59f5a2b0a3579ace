"""Figure-data presets: the (q, B/J) panels behind each figure group.

Every preset expands to a list of sweeps; ``qdimer figure <preset>``
writes one CSV per sweep into the output directory using
:func:`sweep_filename`, which is the naming contract consumed by the
plotting front end.

Panel map (J = 1 throughout, so B doubles as B/J):

* fig1   - T vs T* for q in {0.2, 0.6, 0.9} (one panel per q), B/J in {0, 1, 4}.
* fig2   - T vs T* for q = 2, B/J in {0.5, 1, 2.5, 4}; panel (b) is a
           magnification of the negative-temperature window, which only
           exists past the q-exponential pole, so these sweeps run with
           the past-pole continuation enabled.
* fig3a/b - S vs U and T vs T* for q = 0.2, B/J = 1 (plus a q = 1
           reference sweep); rejected positive-T points are the marker class.
* fig3c/d - same pair for q = 2, B/J = 4 with continuation; rejected
           points exist on both temperature signs.
* fig4   - concurrence families for q < 1: q in {0.2, 0.6, 0.9}.
* fig5   - concurrence families for 1 < q <= 2: q in {1.2, 1.5, 2.0}.
* fig6   - concurrence families for 1 <= q <= 2.8: q in {1.0, 1.6, 2.2, 2.8}.

fig4-fig6 panels are indexed by B/J in {0, 1, 1.2}.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SweepSpec:
    """One sweep of a figure preset."""

    q: float
    b_over_j: float
    t_min: float
    t_max: float
    steps: int
    spacing: str = "uniform"
    past_pole: bool = False
    role: str = "main"  # 'main' or 'reference' (q = 1 comparison curve)


def sweep_filename(preset: str, spec: SweepSpec) -> str:
    """Deterministic CSV name for one sweep of a preset."""
    return f"{preset}__q{spec.q:g}__bj{spec.b_over_j:g}.csv"


def _concurrence_family(qs: tuple[float, ...]) -> tuple[SweepSpec, ...]:
    return tuple(
        SweepSpec(q=q, b_over_j=b, t_min=0.1, t_max=3.0, steps=300)
        for b in (0.0, 1.0, 1.2)
        for q in qs
    )


PRESETS: dict[str, tuple[SweepSpec, ...]] = {
    "fig1": tuple(
        SweepSpec(q=q, b_over_j=b, t_min=0.02, t_max=5.0, steps=400)
        for q in (0.2, 0.6, 0.9)
        for b in (0.0, 1.0, 4.0)
    ),
    "fig2": tuple(
        SweepSpec(q=2.0, b_over_j=b, t_min=0.05, t_max=8.0, steps=500, past_pole=True)
        for b in (0.5, 1.0, 2.5, 4.0)
    ),
    "fig3a": (
        SweepSpec(q=0.2, b_over_j=1.0, t_min=0.02, t_max=5.0, steps=600),
        SweepSpec(q=1.0, b_over_j=1.0, t_min=0.02, t_max=5.0, steps=600, role="reference"),
    ),
    "fig3b": (
        SweepSpec(q=0.2, b_over_j=1.0, t_min=0.02, t_max=5.0, steps=600),
    ),
    "fig3c": (
        SweepSpec(q=2.0, b_over_j=4.0, t_min=2.0, t_max=8.0, steps=600, past_pole=True),
        SweepSpec(q=1.0, b_over_j=4.0, t_min=2.0, t_max=8.0, steps=600, role="reference"),
    ),
    "fig3d": (
        SweepSpec(q=2.0, b_over_j=4.0, t_min=2.0, t_max=8.0, steps=600, past_pole=True),
    ),
    "fig4": _concurrence_family((0.2, 0.6, 0.9)),
    "fig5": _concurrence_family((1.2, 1.5, 2.0)),
    "fig6": _concurrence_family((1.0, 1.6, 2.2, 2.8)),
}


def preset_help() -> str:
    lines = ["figure presets (J = 1, B = B/J):"]
    for name, specs in PRESETS.items():
        qs = sorted({s.q for s in specs if s.role == "main"})
        bs = sorted({s.b_over_j for s in specs})
        cont = " (past-pole continuation)" if any(s.past_pole for s in specs) else ""
        lines.append(f"  {name}: q in {qs}, B/J in {bs}{cont}")
    return "\n".join(lines)
