import shutil
import subprocess

import pytest

from hazeplot.cli import main

FIXTURE_CSV = """\
n,mpd,algo,epsilon,trials,mean_runtime_ns,feasible_count,mean_total_hazing
5,60,dp,,30,12000.0,30,14.2
5,60,ilp,,30,32000.0,30,14.2
5,600,dp,,30,98000.0,30,120.5
5,600,ilp,,30,35000.0,30,120.5
"""

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


@pytest.fixture
def bench_csv(tmp_path):
    path = tmp_path / "bench.csv"
    path.write_text(FIXTURE_CSV, encoding="utf-8")
    return str(path)


def test_plot_succeeds(bench_csv, tmp_path, capsys):
    out = tmp_path / "fig.png"
    code = main(["plot", "--csv", bench_csv, "--layout", "vs-mpd", "--fixed", "5", "--out", str(out)])
    assert code == 0
    assert capsys.readouterr().out == f"wrote {out}\n"
    assert out.read_bytes().startswith(PNG_MAGIC)


def test_plot_every_layout(bench_csv, tmp_path):
    for layout, fixed in (("vs-mpd", "5"), ("vs-n", "60"), ("crossover", "5")):
        out = tmp_path / f"{layout}.png"
        code = main(["plot", "--csv", bench_csv, "--layout", layout, "--fixed", fixed, "--out", str(out)])
        assert code == 0
        assert out.exists()


def test_missing_column_is_a_data_error(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("n,mpd,algo\n5,60,dp\n", encoding="utf-8")
    code = main(["plot", "--csv", str(bad), "--layout", "vs-mpd", "--fixed", "5", "--out", str(tmp_path / "f.png")])
    assert code == 1
    err = capsys.readouterr().err
    assert err.startswith("error:")
    assert "missing columns" in err


def test_empty_selection_is_a_data_error(bench_csv, tmp_path, capsys):
    code = main(["plot", "--csv", bench_csv, "--layout", "vs-mpd", "--fixed", "99", "--out", str(tmp_path / "f.png")])
    assert code == 1
    assert "no rows with n=99" in capsys.readouterr().err


def test_unreadable_csv_is_a_data_error(tmp_path, capsys):
    code = main(["plot", "--csv", str(tmp_path / "nope.csv"), "--layout", "vs-mpd", "--fixed", "5", "--out", str(tmp_path / "f.png")])
    assert code == 1
    assert capsys.readouterr().err.startswith("error:")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["plot"],
        ["plot", "--csv", "x.csv", "--layout", "sideways", "--fixed", "5", "--out", "f.png"],
        ["plot", "--csv", "x.csv", "--layout", "vs-mpd", "--fixed", "five", "--out", "f.png"],
        ["nonsense"],
    ],
)
def test_bad_invocations_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_installed_entry_point_is_deterministic_across_processes(bench_csv, tmp_path):
    exe = shutil.which("hazeplot")
    assert exe is not None, "console script not installed"
    outs = [tmp_path / "fig1.png", tmp_path / "fig2.png"]
    for out in outs:
        proc = subprocess.run(
            [exe, "plot", "--csv", bench_csv, "--layout", "crossover", "--fixed", "5", "--out", str(out)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stderr
    data = outs[0].read_bytes()
    assert data.startswith(PNG_MAGIC)
    assert data == outs[1].read_bytes()


@pytest.mark.skipif(shutil.which("hazeopt") is None, reason="solver CLI not installed")
def test_renders_from_real_bench_output(tmp_path):
    csv_path = tmp_path / "real.csv"
    proc = subprocess.run(
        [
            "hazeopt", "bench",
            "--n-list", "5", "--mpd-list", "60,600", "--trials", "10",
            "--algos", "dp,ilp", "--seed", "7", "--out", str(csv_path),
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    out = tmp_path / "crossover.png"
    code = main(["plot", "--csv", str(csv_path), "--layout", "crossover", "--fixed", "5", "--out", str(out)])
    assert code == 0
    assert out.read_bytes().startswith(PNG_MAGIC)
