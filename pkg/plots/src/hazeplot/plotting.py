"""Semi-log runtime figures from benchmark CSVs.

The input is the fixed eight-column CSV the bench harness writes; the only
coupling to the solver package is that file format.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

from matplotlib.figure import Figure

LAYOUTS = ("vs-mpd", "vs-n", "crossover")
REQUIRED_COLUMNS = (
    "n",
    "mpd",
    "algo",
    "epsilon",
    "trials",
    "mean_runtime_ns",
    "feasible_count",
    "mean_total_hazing",
)
FIGURE_SIZE = (6.4, 4.8)
FIGURE_DPI = 100


class PlotDataError(ValueError):
    """The CSV cannot support the requested figure."""


@dataclass(frozen=True)
class PlotSpec:
    """One figure: which CSV, which layout, the held-constant value, where
    to write the image."""

    csv_path: str
    layout: str
    fixed: int
    out_path: str

    def __post_init__(self) -> None:
        if self.layout not in LAYOUTS:
            raise ValueError(f"layout must be one of {', '.join(LAYOUTS)}, got {self.layout!r}")
        if not isinstance(self.fixed, int):
            raise ValueError(f"fixed axis value must be an integer, got {self.fixed!r}")


def read_records(csv_path: str) -> list[dict]:
    """Parse benchmark rows, insisting on the full schema."""
    with open(csv_path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        fields = reader.fieldnames or []
        missing = [c for c in REQUIRED_COLUMNS if c not in fields]
        if missing:
            raise PlotDataError(f"{csv_path}: missing columns: {', '.join(missing)}")
        records = []
        for row in reader:
            try:
                records.append(
                    {
                        "n": int(row["n"]),
                        "mpd": int(row["mpd"]),
                        "algo": row["algo"],
                        "epsilon": row["epsilon"],
                        "mean_runtime_ns": float(row["mean_runtime_ns"]),
                    }
                )
            except (TypeError, ValueError) as exc:
                raise PlotDataError(f"{csv_path}: bad row {row!r}: {exc}") from exc
    if not records:
        raise PlotDataError(f"{csv_path}: no data rows")
    return records


def curve_label(algo: str, epsilon: str) -> str:
    if algo == "fptas":
        return f"FPTAS \N{GREEK SMALL LETTER EPSILON}={epsilon}"
    return algo.upper()


def select_curves(records: list[dict], layout: str, fixed: int) -> tuple[str, dict[str, list[tuple[int, float]]]]:
    """Group rows into one runtime curve per (algo, epsilon).

    Returns the x-axis field name and {legend label: [(x, seconds), ...]}
    with points sorted by x.  Runtimes convert from nanoseconds to seconds.
    """
    x_field = "n" if layout == "vs-n" else "mpd"
    fixed_field = "mpd" if layout == "vs-n" else "n"
    rows = [r for r in records if r[fixed_field] == fixed]
    if layout == "crossover":
        rows = [r for r in rows if r["algo"] in ("dp", "ilp")]
    if not rows:
        raise PlotDataError(f"no rows with {fixed_field}={fixed}" + (" and algo dp/ilp" if layout == "crossover" else ""))
    keys = sorted(
        {(r["algo"], r["epsilon"]) for r in rows},
        key=lambda k: (k[0], float(k[1]) if k[1] else -1.0),
    )
    curves: dict[str, list[tuple[int, float]]] = {}
    for algo, epsilon in keys:
        points = sorted(
            (r[x_field], r["mean_runtime_ns"] / 1e9)
            for r in rows
            if r["algo"] == algo and r["epsilon"] == epsilon
        )
        curves[curve_label(algo, epsilon)] = points
    return x_field, curves


_X_LABELS = {"mpd": "maximum deviation payoff", "n": "actions per game"}


def build_figure(spec: PlotSpec) -> Figure:
    records = read_records(spec.csv_path)
    x_field, curves = select_curves(records, spec.layout, spec.fixed)
    fig = Figure(figsize=FIGURE_SIZE, dpi=FIGURE_DPI)
    ax = fig.add_subplot()
    for label, points in curves.items():
        xs = [x for x, _ in points]
        ys = [y for _, y in points]
        ax.plot(xs, ys, marker="o", label=label)
    ax.set_yscale("log")
    ax.set_xlabel(_X_LABELS[x_field])
    ax.set_ylabel("mean runtime (s)")
    fixed_name = "MPD" if x_field == "n" else "n"
    ax.set_title(f"{fixed_name} = {spec.fixed}")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    return fig


def render(spec: PlotSpec) -> None:
    """Write the figure as a PNG with pinned metadata so identical inputs
    yield identical bytes."""
    fig = build_figure(spec)
    fig.savefig(
        spec.out_path,
        format="png",
        dpi=FIGURE_DPI,
        metadata={"Software": "hazeplot"},
    )
