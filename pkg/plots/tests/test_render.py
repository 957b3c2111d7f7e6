"""Rendering: the 8-panel figure, hull diagram, trial scatter, sweep table."""

import subprocess
import sys

import numpy as np
import pytest
from click.testing import CliRunner

from sfcplots import render, schemas
from sfcplots.cli import main


@pytest.fixture
def runner():
    return CliRunner()


class TestCharacteristics:
    def test_eight_panel_figure(self, artifacts, tmp_path, runner):
        out = tmp_path / "chars.svg"
        result = runner.invoke(main, ["characteristics", "--in",
                                      str(artifacts["bench_dir"]), "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert out.exists() and out.stat().st_size > 0
        assert "8 panel(s)" in result.output

    def test_empty_class_annotated_panel(self, tmp_path, runner):
        empty = tmp_path / "characteristics.csv"
        empty.write_text("budget,solved_count,algo,class\n")
        out = tmp_path / "fig.svg"
        result = runner.invoke(main, ["characteristics", "--in", str(empty),
                                      "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert out.exists()

    def test_forced_panel_without_rows(self, artifacts, tmp_path):
        data = schemas.read_csv(
            artifacts["bench_dir"] / "class1" / "characteristics.csv",
            schemas.CHARACTERISTICS)
        fig = render.render_characteristics(data, tmp_path / "f.svg", classes=[1, 3])
        assert len(fig.axes) == 2

    def test_schema_error_is_hard_and_named(self, tmp_path, runner):
        bad = tmp_path / "characteristics.csv"
        bad.write_text("budget,count,algo,class\n")
        result = runner.invoke(main, ["characteristics", "--in", str(bad),
                                      "--out", str(tmp_path / "f.svg")])
        assert result.exit_code != 0
        assert "solved_count" in result.output

    def test_class2_curve_direction_at_1000(self, tmp_path):
        # harness output, desk-ish scale: the curve optimizer's characteristic
        # at budget 10^3 sits at or above the baseline's
        out = tmp_path / "c2"
        proc = subprocess.run(
            [sys.executable, "-m", "sfcopt.cli", "benchmark", "--class", "2",
             "--count", "20", "--seed", "0", "--max-trials", "1000",
             "--algo", "both", "--out", str(out)],
            capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        data = schemas.read_csv(out / "characteristics.csv", schemas.CHARACTERISTICS)
        at_budget = {}
        for algo in ("mgas", "direct"):
            mask = [a == algo and b <= 1000 for a, b in zip(data["algo"], data["budget"])]
            at_budget[algo] = max(np.asarray(data["solved_count"])[mask])
        assert at_budget["mgas"] >= at_budget["direct"]
        fig = render.render_characteristics(data, tmp_path / "c2.svg")
        assert len(fig.axes) == 1


class TestHullDiagram:
    def test_renders_with_cloud(self, artifacts, tmp_path, runner):
        out = tmp_path / "hull.svg"
        result = runner.invoke(main, ["hull", "--selection", str(artifacts["hull"]),
                                      "--diagram", str(artifacts["diagram"]),
                                      "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert out.exists() and out.stat().st_size > 0

    def test_single_point_selection(self, tmp_path):
        sel = {"iter": np.array([1]), "id": np.array([0]),
               "h": np.array([0.4]), "F": np.array([1.0]),
               "H_lo": np.array([0.0]), "H_hi": np.array([np.inf]),
               "passed_xi": np.array([1])}
        fig = render.render_hull_diagram(sel, tmp_path / "one.svg")
        assert fig.axes[0].collections  # the single highlighted dot

    def test_chain_is_convex_in_the_data(self, artifacts):
        sel = schemas.read_csv(artifacts["hull"], schemas.SELECTION)
        last = sel["iter"].max()
        mask = sel["iter"] == last
        h, F = sel["h"][mask], sel["F"][mask]
        order = np.argsort(h)
        h, F = h[order], F[order]
        assert np.all(np.diff(h) > 0)
        if len(h) >= 3:
            slopes = np.diff(F) / np.diff(h)
            assert np.all(np.diff(slopes) > 0)

    def test_h_columns_bounded_by_depth(self, artifacts):
        diag = schemas.read_csv(artifacts["diagram"], schemas.DIAGRAM)
        lengths = diag["b"] - diag["a"]
        max_depth = int(round(-np.log(lengths.min()) / np.log(3.0)))
        assert len(set(diag["h"])) <= max_depth + 1

    def test_missing_iteration_is_error(self, artifacts, tmp_path, runner):
        result = runner.invoke(main, ["hull", "--selection", str(artifacts["hull"]),
                                      "--iter", "999999",
                                      "--out", str(tmp_path / "x.svg")])
        assert result.exit_code != 0


class TestTrialsAndSweep:
    def test_trial_scatter_with_curve(self, artifacts, tmp_path, runner):
        out = tmp_path / "trials.svg"
        result = runner.invoke(main, ["trials", "--trace", str(artifacts["trace"]),
                                      "--curve", str(artifacts["curve"]),
                                      "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert out.exists() and out.stat().st_size > 0

    def test_sweep_table(self, artifacts, tmp_path, runner):
        out = tmp_path / "sweep.svg"
        result = runner.invoke(main, ["sweep", "--in", str(artifacts["sweep"]),
                                      "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert out.exists() and out.stat().st_size > 0

    def test_directory_output_default_name(self, artifacts, tmp_path, runner):
        result = runner.invoke(main, ["sweep", "--in", str(artifacts["sweep"]),
                                      "--out", str(tmp_path / "figs")])
        assert result.exit_code == 0
        assert (tmp_path / "figs" / "sweep.svg").exists()
