import pytest

from hazeplot import (
    PlotDataError,
    PlotSpec,
    build_figure,
    curve_label,
    read_records,
    render,
    select_curves,
)

FIXTURE_CSV = """\
n,mpd,algo,epsilon,trials,mean_runtime_ns,feasible_count,mean_total_hazing
5,60,dp,,30,12000.0,30,14.2
5,60,fptas,0.5,30,20000.0,30,14.9
5,60,fptas,1,30,15000.0,30,15.3
5,60,ilp,,30,32000.0,30,14.2
5,600,dp,,30,98000.0,30,120.5
5,600,fptas,0.5,30,41000.0,30,126.0
5,600,fptas,1,30,30000.0,30,131.2
5,600,ilp,,30,35000.0,30,120.5
8,60,dp,,30,14000.0,28,13.1
8,60,ilp,,30,40000.0,28,13.1
"""

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


@pytest.fixture
def bench_csv(tmp_path):
    path = tmp_path / "bench.csv"
    path.write_text(FIXTURE_CSV, encoding="utf-8")
    return str(path)


def test_read_records_parses_every_row(bench_csv):
    records = read_records(bench_csv)
    assert len(records) == 10
    first = records[0]
    assert first["n"] == 5
    assert first["mpd"] == 60
    assert first["algo"] == "dp"
    assert first["epsilon"] == ""
    assert first["mean_runtime_ns"] == 12000.0


def test_read_records_accepts_blank_hazing_mean(tmp_path):
    # an all-infeasible series has a runtime but no hazing average
    path = tmp_path / "bench.csv"
    path.write_text(
        "n,mpd,algo,epsilon,trials,mean_runtime_ns,feasible_count,mean_total_hazing\n"
        "5,60,dp,,30,12000.0,0,\n",
        encoding="utf-8",
    )
    records = read_records(str(path))
    assert len(records) == 1
    assert records[0]["mean_runtime_ns"] == 12000.0


def test_read_records_rejects_missing_columns(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("n,mpd,algo\n5,60,dp\n", encoding="utf-8")
    with pytest.raises(PlotDataError, match="missing columns"):
        read_records(str(path))
    with pytest.raises(PlotDataError, match="mean_runtime_ns"):
        read_records(str(path))


def test_read_records_rejects_header_only_file(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text(
        "n,mpd,algo,epsilon,trials,mean_runtime_ns,feasible_count,mean_total_hazing\n",
        encoding="utf-8",
    )
    with pytest.raises(PlotDataError, match="no data rows"):
        read_records(str(path))


def test_read_records_rejects_non_numeric_row(tmp_path):
    path = tmp_path / "junk.csv"
    path.write_text(
        "n,mpd,algo,epsilon,trials,mean_runtime_ns,feasible_count,mean_total_hazing\n"
        "five,60,dp,,30,12000.0,30,14.2\n",
        encoding="utf-8",
    )
    with pytest.raises(PlotDataError, match="bad row"):
        read_records(str(path))


def test_curve_labels():
    assert curve_label("dp", "") == "DP"
    assert curve_label("ilp", "") == "ILP"
    assert curve_label("fptas", "0.5") == "FPTAS ε=0.5"
    assert curve_label("fptas", "1") == "FPTAS ε=1"


def test_select_curves_vs_mpd(bench_csv):
    x_field, curves = select_curves(read_records(bench_csv), "vs-mpd", 5)
    assert x_field == "mpd"
    assert list(curves) == ["DP", "FPTAS ε=0.5", "FPTAS ε=1", "ILP"]
    assert curves["DP"] == [(60, 1.2e-5), (600, 9.8e-5)]
    assert curves["ILP"] == [(60, 3.2e-5), (600, 3.5e-5)]


def test_select_curves_vs_n(bench_csv):
    x_field, curves = select_curves(read_records(bench_csv), "vs-n", 60)
    assert x_field == "n"
    assert curves["DP"] == [(5, 1.2e-5), (8, 1.4e-5)]
    assert curves["FPTAS ε=1"] == [(5, 1.5e-5)]


def test_select_curves_crossover_keeps_exact_algorithms_only(bench_csv):
    x_field, curves = select_curves(read_records(bench_csv), "crossover", 5)
    assert x_field == "mpd"
    assert list(curves) == ["DP", "ILP"]


def test_select_curves_points_sorted_by_x(tmp_path):
    path = tmp_path / "shuffled.csv"
    path.write_text(
        "n,mpd,algo,epsilon,trials,mean_runtime_ns,feasible_count,mean_total_hazing\n"
        "5,600,dp,,30,98000.0,30,120.5\n"
        "5,60,dp,,30,12000.0,30,14.2\n",
        encoding="utf-8",
    )
    _, curves = select_curves(read_records(str(path)), "vs-mpd", 5)
    assert curves["DP"] == [(60, 1.2e-5), (600, 9.8e-5)]


def test_select_curves_empty_selection_raises(bench_csv):
    records = read_records(bench_csv)
    with pytest.raises(PlotDataError, match="no rows with n=99"):
        select_curves(records, "vs-mpd", 99)
    with pytest.raises(PlotDataError, match="no rows with mpd=99"):
        select_curves(records, "vs-n", 99)


def test_plot_spec_validation(bench_csv):
    with pytest.raises(ValueError, match="layout"):
        PlotSpec(csv_path=bench_csv, layout="sideways", fixed=5, out_path="x.png")
    with pytest.raises(ValueError, match="integer"):
        PlotSpec(csv_path=bench_csv, layout="vs-mpd", fixed="5", out_path="x.png")


def test_build_figure_log_axis_and_one_line_per_series(bench_csv, tmp_path):
    spec = PlotSpec(csv_path=bench_csv, layout="vs-mpd", fixed=5, out_path=str(tmp_path / "f.png"))
    fig = build_figure(spec)
    ax = fig.axes[0]
    assert ax.get_yscale() == "log"
    assert len(ax.lines) == 4
    legend_texts = [t.get_text() for t in ax.get_legend().get_texts()]
    assert legend_texts == ["DP", "FPTAS ε=0.5", "FPTAS ε=1", "ILP"]
    assert ax.get_ylabel() == "mean runtime (s)"
    assert ax.get_xlabel() == "maximum deviation payoff"


def test_single_algo_yields_one_curve(tmp_path):
    path = tmp_path / "solo.csv"
    path.write_text(
        "n,mpd,algo,epsilon,trials,mean_runtime_ns,feasible_count,mean_total_hazing\n"
        "5,60,dp,,30,12000.0,30,14.2\n"
        "8,60,dp,,30,14000.0,28,13.1\n",
        encoding="utf-8",
    )
    spec = PlotSpec(csv_path=str(path), layout="vs-n", fixed=60, out_path=str(tmp_path / "f.png"))
    ax = build_figure(spec).axes[0]
    assert len(ax.lines) == 1
    assert ax.get_xlabel() == "actions per game"


def test_build_figure_crossover_has_two_lines(bench_csv, tmp_path):
    spec = PlotSpec(csv_path=bench_csv, layout="crossover", fixed=5, out_path=str(tmp_path / "f.png"))
    ax = build_figure(spec).axes[0]
    assert len(ax.lines) == 2
    assert ax.get_yscale() == "log"


def test_all_layouts_render_deterministic_png(bench_csv, tmp_path):
    # acceptance: every layout renders from one CSV, runtime axis is
    # log-scaled, and rendering twice gives identical bytes
    for layout, fixed in (("vs-mpd", 5), ("vs-n", 60), ("crossover", 5)):
        first = tmp_path / f"{layout}-a.png"
        second = tmp_path / f"{layout}-b.png"
        render(PlotSpec(csv_path=bench_csv, layout=layout, fixed=fixed, out_path=str(first)))
        render(PlotSpec(csv_path=bench_csv, layout=layout, fixed=fixed, out_path=str(second)))
        data = first.read_bytes()
        assert data.startswith(PNG_MAGIC)
        assert len(data) > 1000
        assert data == second.read_bytes()
