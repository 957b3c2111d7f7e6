"""Render benchmark artifacts to static figures (vector output by default)."""

from __future__ import annotations

from pathlib import Path

import click
import numpy as np

from . import render, schemas
from .schemas import SchemaError


def _collect_characteristics(source: Path):
    """A characteristics CSV, or a directory searched for characteristics*.csv."""
    if source.is_dir():
        files = sorted(source.rglob("characteristics*.csv"))
        if not files:
            raise click.ClickException(f"no characteristics CSVs under {source}")
    else:
        files = [source]
    merged = {c: [] for c in schemas.CHARACTERISTICS.columns}
    for path in files:
        data = schemas.read_csv(path, schemas.CHARACTERISTICS)
        for c in merged:
            merged[c].extend(list(data[c]))
    return {
        "budget": np.array(merged["budget"], dtype=int),
        "solved_count": np.array(merged["solved_count"], dtype=int),
        "algo": merged["algo"],
        "class": np.array(merged["class"], dtype=int),
    }


def _out_path(out, default_name):
    path = Path(out)
    if path.suffix:
        path.parent.mkdir(parents=True, exist_ok=True)
        return path
    path.mkdir(parents=True, exist_ok=True)
    return path / default_name


@click.group()
def main():
    """Figures from optimizer/benchmark CSV artifacts."""


@main.command()
@click.option("--in", "source", type=click.Path(exists=True, path_type=Path),
              required=True, help="characteristics CSV or a directory of them")
@click.option("--out", default="fig", help="output file or directory")
@click.option("--classes", default=None, help="comma-separated panel classes")
def characteristics(source, out, classes):
    """Panel grid of problems-solved vs trial budget, per class and algorithm."""
    try:
        data = _collect_characteristics(source)
        panel = [int(v) for v in classes.split(",")] if classes else None
        fig = render.render_characteristics(
            data, _out_path(out, "characteristics.svg"), classes=panel)
    except SchemaError as exc:
        raise click.ClickException(str(exc))
    click.echo(f"rendered {len(fig.axes)} panel(s)")


@main.command()
@click.option("--selection", type=click.Path(exists=True, path_type=Path),
              required=True, help="per-iteration hull selection CSV")
@click.option("--diagram", type=click.Path(exists=True, path_type=Path),
              default=None, help="partition snapshot CSV for the dot cloud")
@click.option("--iter", "iteration", type=int, default=None)
@click.option("--out", default="fig")
def hull(selection, diagram, iteration, out):
    """(h, F) diagram with the selected hull chain highlighted."""
    try:
        sel = schemas.read_csv(selection, schemas.SELECTION)
        cloud = schemas.read_csv(diagram, schemas.DIAGRAM) if diagram else None
        render.render_hull_diagram(sel, _out_path(out, "hull.svg"), cloud, iteration)
    except (SchemaError, ValueError) as exc:
        raise click.ClickException(str(exc))
    click.echo("rendered hull diagram")


@main.command()
@click.option("--trace", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--curve", type=click.Path(exists=True, path_type=Path), default=None,
              help="curve-dump CSV to draw the curve path under the trials")
@click.option("--out", default="fig")
def trials(trace, curve, out):
    """Scatter of trial points in the box, shaded by trial order."""
    try:
        tr = schemas.read_trace_csv(trace)
        cv = schemas.read_curve_csv(curve) if curve else None
        render.render_trial_scatter(tr, _out_path(out, "trials.svg"), cv)
    except (SchemaError, ValueError) as exc:
        raise click.ClickException(str(exc))
    click.echo("rendered trial scatter")


@main.command()
@click.option("--in", "source", type=click.Path(exists=True, path_type=Path),
              required=True, help="eta sweep CSV")
@click.option("--out", default="fig")
def sweep(source, out):
    """Sensitivity table figure from a sweep CSV."""
    try:
        data = schemas.read_csv(source, schemas.SWEEP)
        render.render_sweep_table(data, _out_path(out, "sweep.svg"))
    except SchemaError as exc:
        raise click.ClickException(str(exc))
    click.echo("rendered sweep table")


if __name__ == "__main__":
    main()
