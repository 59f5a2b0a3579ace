"""figplot command line: render one preset's panels from sweep CSVs.

    figplot <preset> --csv-dir <path> --out <path.svg>

Multi-panel presets derive sibling files by inserting the panel letter
before the extension (fig1.svg -> fig1_a.svg, fig1_b.svg, ...).
Exits 1 with a message on missing/empty/malformed CSV input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .panels import PANELS
from .reading import SchemaError
from .render import render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figplot", description="Render qdimer sweep CSVs as SVG panels"
    )
    parser.add_argument("preset", choices=sorted(PANELS))
    parser.add_argument("--csv-dir", type=Path, required=True, help="directory of sweep CSVs")
    parser.add_argument("--out", type=Path, required=True, help="output SVG path (base name)")
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 2
    try:
        written = render(args.preset, args.csv_dir, args.out)
    except SchemaError as exc:
        print(f"figplot: {exc}", file=sys.stderr)
        return 1
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
