"""Command line front end: curve dumps, single optimization runs, test-function
generation, class benchmarks, and eta sweeps."""

from __future__ import annotations

import json
import math
import os
import sys

import click
import numpy as np

from . import bench, gkls, mgas
from .curve import CurveMap
from .direct import direct_run
from .hull import SELECTION_CSV_HEADER
from .results import StoppingRule, trace_csv_header, trace_csv_rows

#: Builtin objectives: name -> (callable factory, known minimizer or None).
BUILTINS = {
    "sphere": (lambda dim: lambda y: float(np.dot(y, y)), lambda dim: np.zeros(dim)),
    "abs-sum": (
        lambda dim: lambda y: float(np.sum(np.abs(y - 0.33))),
        lambda dim: np.full(dim, 0.33),
    ),
    "rastrigin": (
        lambda dim: lambda y: float(
            10.0 * len(y) + np.sum(y * y - 10.0 * np.cos(2.0 * np.pi * y))
        ),
        lambda dim: np.zeros(dim),
    ),
}


def _parse_box(text: str | None, dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Parse 'lo,hi' (uniform) or 'lo,hi;lo,hi;...' (per coordinate)."""
    if text is None:
        return np.full(dim, -1.0), np.full(dim, 1.0)
    pairs = [p for p in text.split(";") if p]
    if len(pairs) == 1:
        pairs = pairs * dim
    if len(pairs) != dim:
        raise click.BadParameter(f"expected 1 or {dim} lo,hi pairs, got {len(pairs)}")
    lo, hi = [], []
    for p in pairs:
        parts = p.split(",")
        if len(parts) != 2:
            raise click.BadParameter(f"bad box pair {p!r}")
        lo.append(float(parts[0]))
        hi.append(float(parts[1]))
    return np.array(lo), np.array(hi)


@click.group()
def main():
    """Global optimization via space-filling curves, plus baseline and harness."""


@main.command("curve-dump")
@click.option("--dim", type=int, required=True)
@click.option("--level", type=int, required=True)
@click.option("--box", default=None, help="lo,hi pair, or ';'-separated pairs per coordinate")
@click.option("--force", is_flag=True, help="allow dumps larger than 2^24 cells")
@click.option("--out", type=click.Path(writable=True), default="-")
def curve_dump(dim, level, box, force, out):
    """Emit CSV `index,x,coord_1..coord_N` of all cell centers in curve order."""
    if dim * level > 24 and not force:
        raise click.ClickException(
            f"refusing to dump 2^{dim * level} cells without --force"
        )
    lo, hi = _parse_box(box, dim)
    cm = CurveMap(dim, level, lo, hi)
    centers = cm.cell_centers(np.arange(cm.num_cells))
    with click.open_file(out, "w") as fh:
        coords = ",".join(f"coord_{j + 1}" for j in range(dim))
        fh.write(f"index,x,{coords}\n")
        for i in range(cm.num_cells):
            x = (i + 0.5) / cm.num_cells
            row = ",".join(repr(float(v)) for v in centers[i])
            fh.write(f"{i},{x!r},{row}\n")


def _resolve_objective(function, dim, gkls_class, gkls_index, gkls_seed):
    if function == "gkls":
        if gkls_class is None:
            raise click.BadParameter("--gkls-class is required with --function gkls")
        seed = gkls.function_seed(gkls_seed, gkls_class, gkls_index)
        fn = gkls.generate(gkls.class_spec(gkls_class, seed))
        return fn, fn.global_minimizer, fn.dim
    if function not in BUILTINS:
        raise click.BadParameter(
            f"unknown function {function!r}; builtins: {', '.join(BUILTINS)} or gkls"
        )
    factory, minimizer = BUILTINS[function]
    return factory(dim), minimizer(dim), dim


@main.command()
@click.option("--algo", type=click.Choice(["mgas", "direct"]), default="mgas")
@click.option("--function", default="gkls", help="builtin name or 'gkls'")
@click.option("--dim", type=int, default=None, help="dimension (builtins only)")
@click.option("--gkls-class", type=int, default=None)
@click.option("--gkls-index", type=int, default=1)
@click.option("--gkls-seed", type=int, default=0)
@click.option("--level", type=int, default=10)
@click.option("--epsilon", type=float, default=1e-4)
@click.option("--eta", type=float, default=None)
@click.option("--max-trials", type=int, default=bench.DESK_MAX_TRIALS)
@click.option("--target", default=None, help="comma-separated minimizer override")
@click.option("--radius", type=float, default=None)
@click.option("--box", default=None)
@click.option("--trace-csv", type=click.Path(writable=True), default=None)
@click.option("--hull-csv", type=click.Path(writable=True), default=None,
              help="per-iteration selection rounds (mgas only)")
@click.option("--diagram-csv", type=click.Path(writable=True), default=None,
              help="final partition snapshot (mgas only)")
@click.option("--json-out", type=click.Path(writable=True), default="-")
def optimize(algo, function, dim, gkls_class, gkls_index, gkls_seed, level, epsilon,
             eta, max_trials, target, radius, box, trace_csv, hull_csv, diagram_csv,
             json_out):
    """Run one optimization and emit the result as JSON (optionally CSV traces)."""
    objective, minimizer, dim = _resolve_objective(
        function, dim, gkls_class, gkls_index, gkls_seed
    )
    if dim is None:
        raise click.BadParameter("--dim is required for builtin functions")
    lo, hi = _parse_box(box, dim)
    if function == "gkls" and box is None:
        lo, hi = np.full(dim, -1.0), np.full(dim, 1.0)
    cfg = mgas.MgasConfig(
        dim=dim, level=level, epsilon=epsilon, eta=eta,
        max_trials=max_trials, box_lo=lo, box_hi=hi,
    )
    if target is not None:
        minimizer = np.array([float(v) for v in target.split(",")])
    if radius is None:
        radius = 0.01 * math.sqrt(dim)
    stop = StoppingRule(
        target=minimizer, radius=radius, max_trials=max_trials
    ) if minimizer is not None else StoppingRule(max_trials=max_trials)

    selection_log = [] if (hull_csv and algo == "mgas") else None
    final_partition = [] if (diagram_csv and algo == "mgas") else None
    if algo == "mgas":
        result = mgas.run(cfg, objective, stop, selection_log=selection_log,
                          final_partition=final_partition)
    else:
        result = direct_run(cfg, objective, stop)

    if trace_csv:
        with open(trace_csv, "w") as fh:
            fh.write(trace_csv_header(dim) + "\n")
            for row in trace_csv_rows(result):
                fh.write(row + "\n")
    if selection_log is not None:
        with open(hull_csv, "w") as fh:
            fh.write(SELECTION_CSV_HEADER + "\n")
            for row in selection_log:
                fh.write(row + "\n")
    if final_partition is not None:
        from .diagram import DIAGRAM_CSV_HEADER, snapshot_rows

        with open(diagram_csv, "w") as fh:
            fh.write(DIAGRAM_CSV_HEADER + "\n")
            for row in snapshot_rows(final_partition, dim):
                fh.write(row + "\n")

    payload = {"schema_version": bench.SCHEMA_VERSION, "algo": algo,
               "function": function, "result": result.summary()}
    with click.open_file(json_out, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


@main.group("gkls")
def gkls_group():
    """Generate and evaluate seeded multiextremal test functions."""


@gkls_group.command("gen")
@click.option("--class", "class_id", type=int, required=True)
@click.option("--index", type=int, default=1)
@click.option("--seed", type=int, default=0)
@click.option("--out", type=click.Path(writable=True), default="-")
def gkls_gen(class_id, index, seed, out):
    """Emit a JSON description (vertex, centers, values, radii) of one function."""
    fn = gkls.generate(gkls.class_spec(class_id, gkls.function_seed(seed, class_id, index)))
    with click.open_file(out, "w") as fh:
        json.dump(fn.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")


@gkls_group.command("eval")
@click.option("--class", "class_id", type=int, required=True)
@click.option("--index", type=int, default=1)
@click.option("--seed", type=int, default=0)
def gkls_eval(class_id, index, seed):
    """Evaluate stdin CSV points (one comma-separated point per line)."""
    fn = gkls.generate(gkls.class_spec(class_id, gkls.function_seed(seed, class_id, index)))
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        y = np.array([float(v) for v in line.split(",")])
        click.echo(repr(fn.evaluate(y)))


@main.command()
@click.option("--algo", type=click.Choice(["mgas", "direct", "both"]), default="both")
@click.option("--class", "class_id", type=int, required=True)
@click.option("--count", type=int, default=None, help="functions per class (desk default)")
@click.option("--seed", type=int, default=0)
@click.option("--epsilon", type=float, default=1e-4)
@click.option("--eta", type=float, default=None, help="class default when omitted")
@click.option("--level", type=int, default=10)
@click.option("--max-trials", type=int, default=None)
@click.option("--full-scale", is_flag=True, help="100 functions and the 10^6 budget")
@click.option("--budget-points", type=int, default=50)
@click.option("--out", type=click.Path(file_okay=False), required=True)
def benchmark(algo, class_id, count, seed, epsilon, eta, level, max_trials,
              full_scale, budget_points, out):
    """Run a class benchmark and write runs.csv plus characteristics.csv."""
    if count is None:
        count = 100 if full_scale else bench.desk_count(class_id)
    if max_trials is None:
        max_trials = bench.FULL_MAX_TRIALS if full_scale else bench.DESK_MAX_TRIALS
    algos = [bench.ALGO_MGAS, bench.ALGO_DIRECT] if algo == "both" else [algo]
    reports = []
    runs_dir = os.path.join(out, "runs")
    os.makedirs(runs_dir, exist_ok=True)
    eta = bench.ETA_BY_CLASS[class_id] if eta is None else eta
    params = dict(epsilon=epsilon, eta=eta, level=level, max_trials=max_trials,
                  radius=bench.stop_radius(class_id), base_seed=seed)
    for a in algos:

        def persist(index, fn_seed, result, algo_name=a):
            bench.write_run_json(
                os.path.join(runs_dir, f"{algo_name}-class{class_id}-{index:03d}.json"),
                class_id=class_id, func_index=index, algo=algo_name,
                seed=fn_seed, params=params, result=result,
            )

        report = bench.run_class(
            a, class_id, count, seed, epsilon=epsilon, eta=eta,
            level=level, max_trials=max_trials, on_result=persist,
        )
        reports.append(report)
        click.echo(
            f"class {class_id} {a}: solved {count - report.unsolved}/{count}, "
            f"average {report.format_average()}, max {report.maximum}"
        )
    budgets = bench.default_budget_grid(max_trials, budget_points)
    paths = bench.save_class_artifacts(out, reports, budgets)
    click.echo(f"wrote {paths['runs']} and {paths['characteristics']}")


@main.command()
@click.option("--param", type=click.Choice(["eta"]), default="eta")
@click.option("--values", required=True, help="comma-separated eta values")
@click.option("--class", "class_id", type=int, required=True)
@click.option("--count", type=int, default=None)
@click.option("--seed", type=int, default=0)
@click.option("--max-trials", type=int, default=bench.DESK_MAX_TRIALS)
@click.option("--out", type=click.Path(writable=True), required=True)
def sweep(param, values, class_id, count, seed, max_trials, out):
    """Sensitivity sweep over eta; writes `eta,average,maximum,unsolved` CSV."""
    if count is None:
        count = bench.desk_count(class_id)
    eta_values = [float(v) for v in values.split(",")]
    rows = bench.eta_sweep(class_id, eta_values, count, seed, max_trials=max_trials)
    bench.write_sweep_csv(out, rows)
    for r in rows:
        click.echo(f"eta={r.eta:g}: average {r.average:.2f}, max {r.maximum}, "
                   f"unsolved {r.unsolved}")


if __name__ == "__main__":
    main()
