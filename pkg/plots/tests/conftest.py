"""Session fixtures: real artifacts produced through the optimizer package's CLI."""

import subprocess
import sys

import pytest


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "sfcopt.cli", *[str(a) for a in args]],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, f"sfcopt {' '.join(map(str, args))}\n{proc.stderr}"
    return proc.stdout


@pytest.fixture(scope="session")
def artifacts(tmp_path_factory):
    root = tmp_path_factory.mktemp("artifacts")
    bench_dir = root / "bench"
    for class_id in range(1, 9):
        run_cli("benchmark", "--class", class_id, "--count", 2, "--seed", 0,
                "--max-trials", 300, "--algo", "both",
                "--out", bench_dir / f"class{class_id}")
    run_cli("optimize", "--algo", "mgas", "--function", "gkls",
            "--gkls-class", 1, "--gkls-index", 1, "--max-trials", 400,
            "--trace-csv", root / "trace.csv",
            "--hull-csv", root / "hull.csv",
            "--diagram-csv", root / "diagram.csv",
            "--json-out", root / "run.json")
    run_cli("curve-dump", "--dim", 2, "--level", 5, "--out", root / "curve.csv")
    run_cli("sweep", "--param", "eta", "--values", "0.1,1e-4", "--class", 1,
            "--count", 2, "--max-trials", 1000, "--out", root / "sweep.csv")
    return {
        "bench_dir": bench_dir,
        "trace": root / "trace.csv",
        "hull": root / "hull.csv",
        "diagram": root / "diagram.csv",
        "curve": root / "curve.csv",
        "sweep": root / "sweep.csv",
        "root": root,
    }
