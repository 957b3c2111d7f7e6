"""Run traces, stop conditions, and the result record shared by both optimizers."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

STOP_SOLVED = "solved"
STOP_BUDGET = "budget"
STOP_STAGNATION = "stagnation"


@dataclass(frozen=True)
class StoppingRule:
    """Stop when a trial lands within `radius` of `target`, or at `max_trials`.

    A run without a known minimizer passes target=None and stops on budget
    (or stagnation) only.
    """

    target: np.ndarray | None
    radius: float
    max_trials: int

    def __init__(self, target=None, radius=0.0, max_trials=1000000):
        if target is not None:
            target = np.asarray(target, dtype=float)
            if radius <= 0:
                raise ValueError("ball radius must be positive")
        if max_trials < 3:
            raise ValueError("max_trials must be >= 3")
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "radius", float(radius))
        object.__setattr__(self, "max_trials", int(max_trials))

    def hit(self, y: np.ndarray) -> bool:
        if self.target is None:
            return False
        return float(np.linalg.norm(y - self.target)) <= self.radius


@dataclass(frozen=True)
class TrialRecord:
    """One objective evaluation: 1-based index, abscissa (None for box methods),
    N-dimensional point, value, and the incumbent value after this trial."""

    index: int
    x: float | None
    y: np.ndarray
    f: float
    f_min: float


@dataclass
class RunResult:
    """Outcome of one optimization run."""

    stop_reason: str
    trials: int
    iterations: int
    intervals: int
    f_min: float
    x_min: float | None
    y_min: np.ndarray
    solved_at_trial: int | None
    trace: list[TrialRecord] = field(default_factory=list)

    @property
    def solved(self) -> bool:
        return self.stop_reason == STOP_SOLVED

    def summary(self) -> dict:
        """JSON-ready counters (no trace)."""
        return {
            "stop_reason": self.stop_reason,
            "solved": self.solved,
            "trials": self.trials,
            "iterations": self.iterations,
            "intervals": self.intervals,
            "f_min": self.f_min,
            "x_min": self.x_min,
            "y_min": [float(v) for v in np.atleast_1d(self.y_min)],
            "solved_at_trial": self.solved_at_trial,
        }


def trace_csv_header(dim: int) -> str:
    coords = ",".join(f"y_{j + 1}" for j in range(dim))
    return f"trial,x,{coords},f,f_min"


def trace_csv_rows(result: RunResult) -> list[str]:
    rows = []
    for t in result.trace:
        x = "" if t.x is None else repr(t.x)
        coords = ",".join(repr(float(v)) for v in np.atleast_1d(t.y))
        rows.append(f"{t.index},{x},{coords},{t.f!r},{t.f_min!r}")
    return rows
