"""Tests for the figure renderer, including the acceptance check:
rendering the golden capacity CSV gives three curves with endpoints
4, 6, 8 bits at zero corruption, monotone decrease, and byte-stable
output across runs.
"""

import csv
import io
import shutil
import subprocess
import sys
from fractions import Fraction
from math import comb
from pathlib import Path

import pytest

from piggyplots import FigureSpec, SchemaError, load_series, render
from piggyplots.render import main

DATA = Path(__file__).parent / "data"
GOLDEN = DATA / "capacity_golden.csv"

HEADER = (
    "experiment,code,n,k,N,K,T,p_d,p_psc_emp,p_psc_ci,p_psc_bound,p_qep_emp,"
    "p_qep_ci,p_qep_bound,logical_rate,c_psc_closed,c_psc_lb,trials,seed"
).split(",")


def _write_csv(path: Path, rows: list[dict]) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=HEADER)
        writer.writeheader()
        for row in rows:
            writer.writerow({**{c: "" for c in HEADER}, **row})


def _binomial_tail(n: int, t: int, p: float) -> float:
    pf = Fraction(p)
    return float(
        sum(comb(n, k) * pf**k * (1 - pf) ** (n - k) for k in range(t + 1, n + 1))
    )


class TestGoldenCapacity:
    def test_three_curves_with_correct_endpoints(self):
        series = load_series([str(GOLDEN)], "capacity")
        assert [s.label for s in series] == ["[[5,1]]", "[[7,1]]", "[[9,1]]"]
        for s, start in zip(series, (4.0, 6.0, 8.0)):
            assert s.x[0] == 0.0
            assert s.y[0] == start

    def test_monotone_decrease(self):
        for s in load_series([str(GOLDEN)], "capacity"):
            assert all(a > b for a, b in zip(s.y, s.y[1:]))

    def test_render_byte_stable(self, tmp_path):
        out1, out2 = tmp_path / "fig1.svg", tmp_path / "fig2.svg"
        render(FigureSpec(inputs=[str(GOLDEN)], kind="capacity", output=str(out1)))
        render(FigureSpec(inputs=[str(GOLDEN)], kind="capacity", output=str(out2)))
        assert out1.read_bytes() == out2.read_bytes()

    def test_svg_carries_labels_and_no_timestamp(self, tmp_path):
        out = tmp_path / "fig.svg"
        render(FigureSpec(inputs=[str(GOLDEN)], kind="capacity", output=str(out)))
        text = out.read_text()
        for label in ("[[5,1]]", "[[7,1]]", "[[9,1]]"):
            assert label in text
        assert "dc:date" not in text


class TestQepKind:
    @pytest.fixture()
    def qep_csv(self, tmp_path):
        rows = []
        for t in (5, 10, 20):
            for p in (0.02, 0.05, 0.1, 0.15, 0.2):
                rows.append({
                    "experiment": "qep_bound", "N": 63, "K": 63 - 2 * t, "T": t,
                    "p_psc_bound": p, "p_qep_bound": _binomial_tail(63, t, p),
                    "trials": 0, "seed": 0,
                })
        rows.append({
            "experiment": "simulate", "code": "[[7,1]]", "n": 7, "k": 1,
            "N": 63, "K": 23, "T": 20, "p_d": 0.023,
            "p_psc_emp": 0.15, "p_qep_emp": 8e-5, "p_qep_ci": 3e-5,
            "p_qep_bound": _binomial_tail(63, 20, 0.15),
            "trials": 1_000_000, "seed": 0,
        })
        path = tmp_path / "qep.csv"
        _write_csv(path, rows)
        return path

    def test_curves_ordered_by_t(self, qep_csv):
        """At any fixed corruption level, a larger T gives a smaller bound."""
        series = {
            s.label: s for s in load_series([str(qep_csv)], "qep") if not s.empirical
        }
        t5 = series["RS(63,53), T=5"]
        t10 = series["RS(63,43), T=10"]
        t20 = series["RS(63,23), T=20"]
        for a, b, c in zip(t5.y, t10.y, t20.y):
            assert a > b > c

    def test_empirical_points_with_whiskers(self, qep_csv):
        empirical = [s for s in load_series([str(qep_csv)], "qep") if s.empirical]
        assert len(empirical) == 1
        assert empirical[0].yerr == [3e-5]

    def test_renders(self, qep_csv, tmp_path):
        out = tmp_path / "qep.svg"
        render(FigureSpec(inputs=[str(qep_csv)], kind="qep", output=str(out)))
        assert out.read_text().startswith("<?xml")


class TestDepolarizingKind:
    def test_load_and_render(self, tmp_path):
        rows = [
            {"experiment": "depolarizing_bound", "code": "[[7,1]]", "n": 7, "k": 1,
             "p_d": p, "p_psc_bound": 1 - (1 - p) ** 7,
             "c_psc_lb": 6 - 12 * p, "trials": 0, "seed": 0}
            for p in (0.001, 0.01, 0.1)
        ]
        path = tmp_path / "depol.csv"
        _write_csv(path, rows)
        series = load_series([str(path)], "depolarizing_bound")
        assert len(series) == 1 and series[0].x == [0.001, 0.01, 0.1]
        out = tmp_path / "depol.svg"
        render(FigureSpec(inputs=[str(path)], kind="depolarizing_bound",
                          output=str(out)))
        assert out.exists()


class TestSchemaErrors:
    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("")
        with pytest.raises(SchemaError):
            load_series([str(path)], "capacity")

    def test_header_only(self, tmp_path):
        path = tmp_path / "header.csv"
        path.write_text(",".join(HEADER) + "\n")
        with pytest.raises(SchemaError):
            load_series([str(path)], "capacity")

    def test_missing_column_named(self, tmp_path):
        path = tmp_path / "bad.csv"
        with path.open("w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=["code", "p_psc_bound"])
            writer.writeheader()
            writer.writerow({"code": "[[5,1]]", "p_psc_bound": "0.0"})
        with pytest.raises(SchemaError, match="c_psc_closed"):
            load_series([str(path)], "capacity")

    def test_unknown_kind(self):
        with pytest.raises(SchemaError):
            FigureSpec(inputs=["x.csv"], kind="pie", output="y.svg")


class TestCli:
    def test_main_renders_svg_and_raster(self, tmp_path):
        svg = tmp_path / "out.svg"
        png = tmp_path / "out.png"
        assert main(["--kind", "capacity", "--in", str(GOLDEN),
                     "--out", str(svg)]) == 0
        assert main(["--kind", "capacity", "--in", str(GOLDEN),
                     "--out", str(png), "--raster"]) == 0
        assert svg.read_bytes().startswith(b"<?xml")
        assert png.read_bytes().startswith(b"\x89PNG")

    def test_axis_ranges(self, tmp_path):
        out = tmp_path / "out.svg"
        assert main(["--kind", "capacity", "--in", str(GOLDEN), "--out", str(out),
                     "--xlim", "0,0.2", "--ylim", "0,8"]) == 0
        assert out.exists()

    def test_missing_input_exit_1(self, tmp_path, capsys):
        assert main(["--kind", "capacity", "--in", str(tmp_path / "no.csv"),
                     "--out", str(tmp_path / "o.svg")]) == 1

    def test_bad_range_exit_1(self, tmp_path):
        assert main(["--kind", "capacity", "--in", str(GOLDEN),
                     "--out", str(tmp_path / "o.svg"), "--xlim", "zero,one"]) == 1


@pytest.mark.skipif(shutil.which("piggyqec") is None,
                    reason="simulator CLI not installed")
class TestEndToEndWithSimulatorCli:
    def test_fresh_capacity_csv_renders(self, tmp_path):
        """Full interop through the external interfaces only: the simulator
        CLI writes a CSV, this package renders it."""
        csv_path = tmp_path / "cap.csv"
        proc = subprocess.run(
            ["piggyqec", "capacity", "--code", "shor", "--p-psc", "0:0.4:0.05",
             "--out", str(csv_path)],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, proc.stderr
        series = load_series([str(csv_path)], "capacity")
        assert series[0].label == "[[9,1]]"
        assert series[0].y[0] == 8.0
        out = tmp_path / "fig.svg"
        render(FigureSpec(inputs=[str(csv_path)], kind="capacity", output=str(out)))
        assert out.exists()
