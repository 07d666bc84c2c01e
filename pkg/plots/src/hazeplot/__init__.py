"""Runtime comparison figures for solver benchmark CSVs."""

from hazeplot.plotting import (
    LAYOUTS,
    REQUIRED_COLUMNS,
    PlotDataError,
    PlotSpec,
    build_figure,
    curve_label,
    read_records,
    render,
    select_curves,
)

__all__ = [
    "LAYOUTS",
    "REQUIRED_COLUMNS",
    "PlotDataError",
    "PlotSpec",
    "build_figure",
    "curve_label",
    "read_records",
    "render",
    "select_curves",
]
