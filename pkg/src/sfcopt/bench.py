"""Benchmark harness: per-class runs, operating characteristics, eta sweeps.

A class run generates `count` seeded test functions, optimizes each with the
chosen algorithm, and stops a run when a trial lands in the ball of radius
rho around the known minimizer or when the trial budget is exhausted; the
trial count of a solved run includes every trial of the iteration that hit
the ball. Unsolved runs enter averages at the full budget and flag the
average as a lower bound.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field

import numpy as np

from . import direct as direct_mod
from . import gkls, mgas
from .results import STOP_SOLVED, RunResult, StoppingRule

SCHEMA_VERSION = 1

ALGO_MGAS = "mgas"
ALGO_DIRECT = "direct"

#: Per-class minimum subdividable length, dimension- and difficulty-informed.
ETA_BY_CLASS = {1: 1e-4, 2: 1e-4, 3: 1e-7, 4: 1e-8, 5: 1e-10, 6: 1e-10, 7: 1e-10, 8: 1e-10}

#: Desk-scale defaults; the full-scale protocol uses 100 functions per class
#: and a 10^6 budget for every class.
DESK_COUNT_BY_DIM = {2: 100, 3: 100, 4: 20, 5: 20}
DESK_MAX_TRIALS = 100_000
FULL_MAX_TRIALS = 1_000_000

RUNS_CSV_HEADER = "class,func_index,algo,solved,trials,stop_reason"
CHARACTERISTICS_CSV_HEADER = "budget,solved_count,algo,class"
SWEEP_CSV_HEADER = "eta,average,maximum,unsolved"


def stop_radius(class_id: int) -> float:
    """Target-ball radius: 0.01*sqrt(N) for classes 1-6, 0.02*sqrt(N) for 7-8."""
    dim = gkls.CLASS_PRESETS[class_id]["dim"]
    scale = 0.02 if class_id >= 7 else 0.01
    return scale * math.sqrt(dim)


def desk_count(class_id: int) -> int:
    return DESK_COUNT_BY_DIM[gkls.CLASS_PRESETS[class_id]["dim"]]


@dataclass(frozen=True)
class RunEntry:
    func_index: int
    seed: int
    solved: bool
    trials: int
    stop_reason: str


@dataclass
class ClassReport:
    """Aggregated outcome of one (class, algorithm) batch."""

    class_id: int
    algo: str
    max_trials: int
    entries: list[RunEntry] = field(default_factory=list)

    @property
    def unsolved(self) -> int:
        return sum(not e.solved for e in self.entries)

    @property
    def counted_trials(self) -> list[int]:
        """Trial counts with unsolved runs charged the full budget."""
        return [e.trials if e.solved else self.max_trials for e in self.entries]

    @property
    def average(self) -> float:
        return float(np.mean(self.counted_trials))

    @property
    def maximum(self) -> int:
        return max(self.counted_trials)

    @property
    def average_is_lower_bound(self) -> bool:
        return self.unsolved > 0

    def format_average(self) -> str:
        prefix = ">" if self.average_is_lower_bound else ""
        return f"{prefix}{self.average:.2f}"


def _run_one(algo: str, fn: gkls.GklsFunction, *, epsilon, eta, level, radius,
             max_trials, record_trace=False) -> RunResult:
    cfg = mgas.MgasConfig(
        dim=fn.dim,
        level=level,
        epsilon=epsilon,
        eta=eta,
        max_trials=max_trials,
        box_lo=np.full(fn.dim, -1.0),
        box_hi=np.full(fn.dim, 1.0),
    )
    stop = StoppingRule(target=fn.global_minimizer, radius=radius, max_trials=max_trials)
    if algo == ALGO_MGAS:
        return mgas.run(cfg, fn, stop, record_trace=record_trace)
    if algo == ALGO_DIRECT:
        return direct_mod.direct_run(cfg, fn, stop, record_trace=record_trace)
    raise ValueError(f"unknown algorithm {algo!r}")


def run_class(algo: str, class_id: int, count: int, base_seed: int, *,
              epsilon: float = 1e-4, eta: float | None = None, level: int = 10,
              radius: float | None = None, max_trials: int = DESK_MAX_TRIALS,
              on_result=None) -> ClassReport:
    """Optimize `count` generated functions of a preset class.

    Functions are indexed 1..count and seeded from (base_seed, class, index),
    so reports are reproducible run to run. Generator infeasibility is
    recorded as an unsolved entry rather than skipped.
    """
    eta = ETA_BY_CLASS[class_id] if eta is None else eta
    radius = stop_radius(class_id) if radius is None else radius
    report = ClassReport(class_id=class_id, algo=algo, max_trials=max_trials)
    for index in range(1, count + 1):
        seed = gkls.function_seed(base_seed, class_id, index)
        try:
            fn = gkls.generate(gkls.class_spec(class_id, seed))
        except gkls.GklsGenerationError:
            report.entries.append(RunEntry(index, seed, False, 0, "generator-infeasible"))
            continue
        result = _run_one(
            algo, fn, epsilon=epsilon, eta=eta, level=level,
            radius=radius, max_trials=max_trials,
        )
        report.entries.append(
            RunEntry(index, seed, result.stop_reason == STOP_SOLVED, result.trials,
                     result.stop_reason)
        )
        if on_result is not None:
            on_result(index, seed, result)
    return report


def default_budget_grid(max_trials: int, points: int = 50) -> list[int]:
    """Log-spaced trial budgets from 10 to the full budget, deduplicated."""
    grid = np.logspace(1.0, math.log10(max_trials), points)
    return sorted(set(int(round(b)) for b in grid))


def operating_characteristics(report: ClassReport, budgets=None) -> list[tuple[int, int]]:
    """(budget, number of functions solved within budget) rows; non-decreasing."""
    if budgets is None:
        budgets = default_budget_grid(report.max_trials)
    rows = []
    for budget in budgets:
        solved = sum(1 for e in report.entries if e.solved and e.trials <= budget)
        rows.append((int(budget), solved))
    return rows


@dataclass(frozen=True)
class SweepRow:
    eta: float
    average: float
    maximum: int
    unsolved: int


def eta_sweep(class_id: int, eta_values, count: int, base_seed: int, *,
              algo: str = ALGO_MGAS, **kwargs) -> list[SweepRow]:
    """run_class once per eta value; rows mirror the sensitivity-table layout."""
    rows = []
    for eta in eta_values:
        report = run_class(algo, class_id, count, base_seed, eta=eta, **kwargs)
        rows.append(SweepRow(eta, report.average, report.maximum, report.unsolved))
    return rows


def write_runs_csv(path, reports: list[ClassReport]) -> None:
    with open(path, "w") as fh:
        fh.write(RUNS_CSV_HEADER + "\n")
        for rep in reports:
            for e in rep.entries:
                fh.write(
                    f"{rep.class_id},{e.func_index},{rep.algo},{int(e.solved)},"
                    f"{e.trials},{e.stop_reason}\n"
                )


def write_characteristics_csv(path, labelled_rows) -> None:
    """labelled_rows: iterable of (class_id, algo, [(budget, solved_count), ...])."""
    with open(path, "w") as fh:
        fh.write(CHARACTERISTICS_CSV_HEADER + "\n")
        for class_id, algo, rows in labelled_rows:
            for budget, solved in rows:
                fh.write(f"{budget},{solved},{algo},{class_id}\n")


def write_sweep_csv(path, rows: list[SweepRow]) -> None:
    with open(path, "w") as fh:
        fh.write(SWEEP_CSV_HEADER + "\n")
        for r in rows:
            fh.write(f"{r.eta!r},{r.average!r},{r.maximum},{r.unsolved}\n")


def write_run_json(path, *, class_id, func_index, algo, seed, params: dict,
                   result: RunResult) -> None:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "class": class_id,
        "func_index": func_index,
        "algo": algo,
        "seed": seed,
        "params": params,
        "result": result.summary(),
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def save_class_artifacts(out_dir, reports: list[ClassReport], budgets=None) -> dict:
    """Write the per-run CSV and characteristics CSV for a batch of reports."""
    os.makedirs(out_dir, exist_ok=True)
    runs_path = os.path.join(out_dir, "runs.csv")
    write_runs_csv(runs_path, reports)
    labelled = [
        (rep.class_id, rep.algo, operating_characteristics(rep, budgets))
        for rep in reports
    ]
    chars_path = os.path.join(out_dir, "characteristics.csv")
    write_characteristics_csv(chars_path, labelled)
    return {"runs": runs_path, "characteristics": chars_path}
