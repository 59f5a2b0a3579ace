"""Command-line driver: parameter sweeps, figure data, self-verification.

    qdimer sweep --q Q --j J --b B --t-min A --t-max B --steps N
                 [--log] [--fd-step H] [--past-pole] --out FILE
    qdimer figure PRESET --out-dir DIR
    qdimer verify [--seed N] [--q Q]

Exit codes: 0 success, 1 verification failure, 2 configuration error,
3 domain failure covering the whole grid.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import verification
from .cli_io import write_csv
from .dimer import DimerParams
from .errors import ConfigError, QDimerError
from .presets import PRESETS, preset_help, sweep_filename
from .thermo import evaluate_sweep, physicality_filter

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG = 2
EXIT_DOMAIN = 3


@dataclass(frozen=True)
class RunConfig:
    """Validated parameters of one sweep run."""

    q: float
    J: float
    B: float
    t_min: float
    t_max: float
    steps: int
    spacing: str = "uniform"
    fd_step: float = 1e-5
    past_pole: bool = False
    out: Path | None = None
    seed: int = 20240809

    def __post_init__(self) -> None:
        if self.steps < 3:
            raise ConfigError(f"--steps must be >= 3, got {self.steps}")
        if not (self.t_min < self.t_max):
            raise ConfigError(f"need t_min < t_max, got [{self.t_min}, {self.t_max}]")
        if self.spacing == "log" and self.t_min <= 0.0:
            raise ConfigError("log spacing requires --t-min > 0")
        if self.fd_step <= 0.0:
            raise ConfigError(f"--fd-step must be positive, got {self.fd_step}")


def compute_filtered_sweep(cfg: RunConfig):
    sweep = evaluate_sweep(
        DimerParams(J=cfg.J, B=cfg.B),
        cfg.q,
        t_min=cfg.t_min,
        t_max=cfg.t_max,
        steps=cfg.steps,
        spacing=cfg.spacing,
        fd_step=cfg.fd_step,
        past_pole=cfg.past_pole,
    )
    return physicality_filter(sweep)


def run_sweep(cfg: RunConfig) -> int:
    """Evaluate, filter and write one sweep; exit 3 if no node is evaluable."""
    sweep = compute_filtered_sweep(cfg)
    write_csv(sweep, cfg.out)
    if not any(pt.ok for pt in sweep.points):
        print(
            f"qdimer: no grid node is evaluable for q={cfg.q}, J={cfg.J}, B={cfg.B} "
            f"on T* in [{cfg.t_min}, {cfg.t_max}] (CSV written with NaN rows)",
            file=sys.stderr,
        )
        return EXIT_DOMAIN
    return EXIT_OK


def run_figure(preset: str, out_dir: Path) -> int:
    """Write the CSV set of one figure preset into ``out_dir``."""
    specs = PRESETS[preset]
    out_dir.mkdir(parents=True, exist_ok=True)
    status = EXIT_OK
    for spec in specs:
        cfg = RunConfig(
            q=spec.q,
            J=1.0,
            B=spec.b_over_j,
            t_min=spec.t_min,
            t_max=spec.t_max,
            steps=spec.steps,
            spacing=spec.spacing,
            past_pole=spec.past_pole,
            out=out_dir / sweep_filename(preset, spec),
        )
        status = max(status, run_sweep(cfg))
    return status


def run_verify(seed: int = 20240809, q: float | None = None) -> int:
    """Execute the invariant battery and print one line per check."""
    results = verification.run_all(seed=seed, q=q)
    for res in results:
        print(f"{res.status:<5} {res.name:<35} {res.detail}")
    failed = sum(res.failed for res in results)
    passed = sum(res.status == verification.PASS for res in results)
    skipped = sum(res.status == verification.SKIP for res in results)
    print(f"{passed} passed, {failed} failed, {skipped} skipped")
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdimer",
        description="Nonextensive thermodynamics and entanglement of the spin-1/2 XX dimer",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="write one sweep as CSV")
    sweep.add_argument("--q", type=float, required=True, help="entropic index")
    sweep.add_argument("--j", type=float, required=True, help="exchange coupling J")
    sweep.add_argument("--b", type=float, required=True, help="magnetic field B")
    sweep.add_argument("--t-min", type=float, required=True, help="lowest pseudo temperature")
    sweep.add_argument("--t-max", type=float, required=True, help="highest pseudo temperature")
    sweep.add_argument("--steps", type=int, required=True, help="number of grid nodes (>= 3)")
    sweep.add_argument("--log", action="store_true", help="log-spaced grid instead of uniform")
    sweep.add_argument(
        "--fd-step", type=float, default=1e-5, help="finite-difference step scale (default 1e-5)"
    )
    sweep.add_argument(
        "--past-pole",
        action="store_true",
        help="continue integer-exponent q-weights through their pole "
        "(negative-temperature branches; q = 2 style indices only)",
    )
    sweep.add_argument("--out", type=Path, required=True, help="output CSV path")

    figure = sub.add_parser(
        "figure",
        help="write the CSV set of a figure preset",
        epilog=preset_help(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    figure.add_argument("preset", choices=sorted(PRESETS))
    figure.add_argument("--out-dir", type=Path, required=True)

    verify = sub.add_parser("verify", help="run the self-verification battery")
    verify.add_argument("--seed", type=int, default=20240809, help="Monte Carlo seed")
    verify.add_argument(
        "--q",
        type=float,
        default=None,
        help="narrow the fluctuation-average checks to one index "
        "(q <= 1 skips them: the Gamma identification needs q > 1)",
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage, matching our config-error code
        return int(exc.code) if exc.code is not None else EXIT_CONFIG
    try:
        if args.command == "sweep":
            cfg = RunConfig(
                q=args.q,
                J=args.j,
                B=args.b,
                t_min=args.t_min,
                t_max=args.t_max,
                steps=args.steps,
                spacing="log" if args.log else "uniform",
                fd_step=args.fd_step,
                past_pole=args.past_pole,
                out=args.out,
            )
            return run_sweep(cfg)
        if args.command == "figure":
            return run_figure(args.preset, args.out_dir)
        return run_verify(seed=args.seed, q=args.q)
    except ConfigError as exc:
        print(f"qdimer: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except QDimerError as exc:
        print(f"qdimer: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
