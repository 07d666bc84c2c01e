"""Command line front end.

Exit codes: 0 on success, 1 when the CSV cannot produce the figure,
2 for bad invocations.
"""

from __future__ import annotations

import argparse
import sys

from hazeplot.plotting import LAYOUTS, PlotDataError, PlotSpec, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hazeplot", description="Render runtime figures from benchmark CSVs.")
    sub = parser.add_subparsers(dest="command", required=True)

    plot = sub.add_parser("plot", help="render one figure")
    plot.add_argument("--csv", required=True, help="benchmark CSV file")
    plot.add_argument("--layout", required=True, choices=LAYOUTS, help="figure layout")
    plot.add_argument("--fixed", required=True, type=int, help="value held constant on the non-plotted axis")
    plot.add_argument("--out", required=True, help="output image path")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    spec = PlotSpec(csv_path=args.csv, layout=args.layout, fixed=args.fixed, out_path=args.out)
    try:
        render(spec)
    except (PlotDataError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {spec.out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
