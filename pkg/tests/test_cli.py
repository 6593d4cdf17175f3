"""End-to-end command-line behaviour: files, exit codes, determinism."""

import subprocess
import sys
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from fundepth import five_number_summary, load_csv
from fundepth.cli import main
from fundepth.report import read_depth_csv


def run(*argv):
    return main(list(argv))


@pytest.fixture()
def bm_csv(tmp_path):
    path = tmp_path / "bm.csv"
    assert run("simulate", "--kind", "bm", "--n", "12", "--d", "30",
               "--seed", "3", "--out", str(path)) == 0
    return path


def test_simulate_writes_grid_header(tmp_path):
    out = tmp_path / "paths.csv"
    assert run("simulate", "--kind", "bm", "--n", "5", "--d", "9",
               "--seed", "1", "--out", str(out)) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 6  # grid row + 5 curves
    header = lines[0].split(",")
    assert len(header) == 9
    assert float(header[0]) == pytest.approx(0.1)
    sample = load_csv(out, grid_header=True)
    assert sample.values.shape == (5, 9)


def test_simulate_gauss_seq_is_headerless(tmp_path):
    out = tmp_path / "seq.csv"
    assert run("simulate", "--kind", "gauss_seq", "--n", "4", "--d", "6",
               "--seed", "2", "--out", str(out)) == 0
    assert len(out.read_text().splitlines()) == 4
    sample = load_csv(out)
    assert np.array_equal(sample.grid.points, np.arange(1.0, 7.0))


def test_simulate_fbm_requires_hurst(tmp_path):
    code = run("simulate", "--kind", "fbm", "--n", "3", "--d", "5",
               "--seed", "1", "--out", str(tmp_path / "x.csv"))
    assert code == 2


def test_depth_toy_spatial(tmp_path, capsys):
    data = tmp_path / "toy.csv"
    data.write_text("0.0,0.0\n1.0,1.0\n2.0,2.0\n")
    out = tmp_path / "depths.csv"
    assert run("depth", str(data), "--kind", "sd", "--out", str(out)) == 0
    parsed = read_depth_csv(out)
    assert parsed[0][0] == "sd"
    values = parsed[0][1]
    assert values.shape == (3,)
    assert ((values >= 0) & (values <= 1)).all()
    assert values[1] == 1.0  # the middle curve is between the other two


def test_depth_rerun_is_byte_identical(bm_csv, tmp_path):
    out1 = tmp_path / "d1.csv"
    out2 = tmp_path / "d2.csv"
    args = ["depth", str(bm_csv), "--grid-header", "--kind", "mbd,rtd",
            "--N", "60", "--seed", "9"]
    assert run(*args, "--out", str(out1)) == 0
    assert run(*args, "--out", str(out2)) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_depth_halfspace_collapses_when_d_exceeds_n(bm_csv, tmp_path):
    out = tmp_path / "hd.csv"
    assert run("depth", str(bm_csv), "--grid-header", "--kind", "hd",
               "--out", str(out)) == 0
    values = read_depth_csv(out)[0][1]
    assert (values == 0.0).all()


def test_depth_include_self_changes_values(bm_csv, tmp_path):
    loo = tmp_path / "loo.csv"
    full = tmp_path / "full.csv"
    assert run("depth", str(bm_csv), "--grid-header", "--kind", "mbd",
               "--out", str(loo)) == 0
    assert run("depth", str(bm_csv), "--grid-header", "--kind", "mbd",
               "--include-self", "--out", str(full)) == 0
    a = read_depth_csv(loo)[0][1]
    b = read_depth_csv(full)[0][1]
    assert not np.array_equal(a, b)


def test_report_summary_matches_depth_table(bm_csv, tmp_path):
    depth_out = tmp_path / "depths.csv"
    summary_out = tmp_path / "summary.csv"
    common = ["--grid-header", "--kind", "mbd,sd", "--seed", "5"]
    assert run("depth", str(bm_csv), *common, "--out", str(depth_out)) == 0
    assert run("report", str(bm_csv), *common, "--out", str(summary_out)) == 0

    parsed = dict(read_depth_csv(depth_out))
    lines = summary_out.read_text().splitlines()
    assert lines[0] == "kind,min,q1,median,q3,max"
    assert len(lines) == 3
    for line in lines[1:]:
        cells = line.split(",")
        expected = five_number_summary(parsed[cells[0]])
        assert tuple(float(c) for c in cells[1:]) == expected


def test_report_svg_has_one_marker_per_curve(bm_csv, tmp_path):
    svg = tmp_path / "plot.svg"
    assert run("report", str(bm_csv), "--grid-header", "--kind", "mbd,sd",
               "--out", str(tmp_path / "s.csv"), "--svg", str(svg)) == 0
    root = ET.fromstring(svg.read_text())
    circles = [el for el in root.iter() if el.tag.endswith("circle")]
    assert len(circles) == 2 * 12


def test_diff_identical_processes(bm_csv, tmp_path, capsys):
    other = tmp_path / "bm2.csv"
    assert run("simulate", "--kind", "bm", "--n", "12", "--d", "30",
               "--seed", "4", "--out", str(other)) == 0
    out = tmp_path / "diff.csv"
    assert run("diff", str(bm_csv), str(other), "--grid-header",
               "--kind", "sd", "--out", str(out)) == 0
    printed = capsys.readouterr().out.splitlines()
    assert printed[0] == "group,kind,agreement"
    assert len(printed) == 3
    for line in printed[1:]:
        group, kind, rate = line.split(",")
        assert group in ("A", "B") and kind == "sd"
        assert 0.0 <= float(rate) <= 1.0

    lines = out.read_text().splitlines()
    assert lines[0] == "group,row_index,depth_vs_a,depth_vs_b,diff,kind"
    assert len(lines) == 1 + 24
    for line in lines[1:]:
        cells = line.split(",")
        assert float(cells[4]) == float(cells[2]) - float(cells[3])


def test_diff_rerun_is_byte_identical(bm_csv, tmp_path, capsys):
    other = tmp_path / "bm2.csv"
    run("simulate", "--kind", "bm", "--n", "12", "--d", "30",
        "--seed", "4", "--out", str(other))
    out1, out2 = tmp_path / "f1.csv", tmp_path / "f2.csv"
    args = ["diff", str(bm_csv), str(other), "--grid-header", "--kind", "mbd,sd"]
    assert run(*args, "--out", str(out1)) == 0
    first = capsys.readouterr().out
    assert run(*args, "--out", str(out2)) == 0
    second = capsys.readouterr().out
    assert out1.read_bytes() == out2.read_bytes()
    assert first == second


def test_diff_rejects_mismatched_grids(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    a.write_text("0.1,0.5,0.9\n1.0,2.0,3.0\n0.0,1.0,2.0\n2.0,0.0,1.0\n")
    b.write_text("0.2,0.5,0.9\n1.0,2.0,3.0\n0.0,1.0,2.0\n2.0,0.0,1.0\n")
    code = run("diff", str(a), str(b), "--grid-header", "--kind", "sd",
               "--out", str(tmp_path / "d.csv"))
    assert code == 1


def test_diff_tiny_groups_fail_cleanly(tmp_path, capsys):
    a = tmp_path / "a.csv"
    a.write_text("1.0,2.0\n")
    code = run("diff", str(a), str(a), "--kind", "sd",
               "--out", str(tmp_path / "d.csv"))
    assert code == 2
    assert "at least 3" in capsys.readouterr().err


def test_unknown_kind_lists_choices(bm_csv, tmp_path, capsys):
    code = run("depth", str(bm_csv), "--grid-header", "--kind", "zzz",
               "--out", str(tmp_path / "d.csv"))
    assert code == 2
    err = capsys.readouterr().err
    assert "zzz" in err and "mbd" in err


def test_missing_input_file(tmp_path, capsys):
    code = run("depth", str(tmp_path / "nope.csv"), "--kind", "sd",
               "--out", str(tmp_path / "d.csv"))
    assert code == 1


def test_bad_flag_value_is_usage_error(bm_csv, tmp_path):
    code = run("depth", str(bm_csv), "--grid-header", "--kind", "id",
               "--univariate", "mean", "--out", str(tmp_path / "d.csv"))
    assert code == 2


def test_module_entry_point(tmp_path):
    out = tmp_path / "m.csv"
    proc = subprocess.run(
        [sys.executable, "-m", "fundepth", "simulate", "--kind", "bm",
         "--n", "3", "--d", "4", "--seed", "0", "--out", str(out)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert out.exists()
