"""Center-sampling trisection baseline operating directly on the N-dimensional box.

Boxes are drawn in the Euclidean diagram (half-diagonal, center value); the
potentially optimal ones are picked by the same lower-right hull and
improvement threshold used for the curve-based optimizer, then trisected
along their longest sides, dividing first along the side whose sampled pair
has the better value so good points end up in the larger children.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field

import numpy as np

from .diagram import DiagramPoint
from .hull import filter_improving, nondominated
from .results import (
    STOP_BUDGET,
    STOP_SOLVED,
    STOP_STAGNATION,
    RunResult,
    StoppingRule,
    TrialRecord,
)
from .mgas import MgasConfig


@dataclass
class BoxRecord:
    """Subbox with per-side trisection counts; measure is the half-diagonal."""

    id: int
    center: np.ndarray
    levels: np.ndarray  # trisections applied per side
    f_center: float
    side_lengths: np.ndarray
    measure: float

    @staticmethod
    def build(box_id: int, center, levels, f_center, span) -> "BoxRecord":
        sides = span * 3.0 ** (-levels.astype(float))
        # Summing the sorted squares keeps equal level-multisets bit-identical,
        # so the hull's exact-h grouping never splits an equal-measure class.
        s = np.sort(sides)
        measure = 0.5 * math.sqrt(float(np.sum(s * s)))
        return BoxRecord(box_id, center, levels, f_center, sides, measure)

    @property
    def volume(self) -> float:
        return float(np.prod(self.side_lengths))


@dataclass
class _DirectState:
    span: np.ndarray
    boxes: dict[int, BoxRecord] = field(default_factory=dict)
    k: int = 0
    J: int = 0
    T: int = 0
    f_min: float = math.inf
    y_min: np.ndarray | None = None
    trace: list[TrialRecord] = field(default_factory=list)
    record_trace: bool = True
    solved_at: int | None = None
    _next_id: int = 0
    # boxes bucketed by exact measure, min-heaped by (f_center, id); the hull
    # only ever needs each measure group's best representative
    _groups: dict[float, list] = field(default_factory=dict)
    _alive_per_measure: dict[float, int] = field(default_factory=dict)

    def trial(self, y: np.ndarray, objective, stop: StoppingRule | None) -> float:
        f = float(objective(y))
        self.T += 1
        if f < self.f_min:
            self.f_min, self.y_min = f, y.copy()
        if self.record_trace:
            self.trace.append(TrialRecord(self.T, None, y.copy(), f, self.f_min))
        if stop is not None and self.solved_at is None and stop.hit(y):
            self.solved_at = self.T
        return f

    def add_box(self, center, levels, f_center) -> BoxRecord:
        box = BoxRecord.build(self._next_id, center, levels, f_center, self.span)
        self._next_id += 1
        self.boxes[box.id] = box
        heapq.heappush(self._groups.setdefault(box.measure, []),
                       (box.f_center, box.id))
        self._alive_per_measure[box.measure] = (
            self._alive_per_measure.get(box.measure, 0) + 1)
        return box

    def drop_box(self, box: BoxRecord) -> None:
        del self.boxes[box.id]
        self._alive_per_measure[box.measure] -= 1

    def group_minima(self) -> list[DiagramPoint]:
        reps = []
        for measure, heap in self._groups.items():
            if self._alive_per_measure.get(measure, 0) == 0:
                continue
            while heap[0][1] not in self.boxes:
                heapq.heappop(heap)
            f, box_id = heap[0]
            reps.append(DiagramPoint(box_id, measure, f))
        return reps


def direct_run(cfg: MgasConfig, objective, stop: StoppingRule | None = None, *,
               record_trace: bool = True) -> RunResult:
    """Run the baseline with the same config, stopping rule, and result schema
    as the curve-based optimizer (level and eta are ignored)."""
    if stop is None:
        stop = StoppingRule(max_trials=cfg.max_trials)
    state = _DirectState(span=cfg.box_hi - cfg.box_lo, record_trace=record_trace)
    center = 0.5 * (cfg.box_lo + cfg.box_hi)
    f0 = state.trial(center, objective, stop)
    state.add_box(center, np.zeros(cfg.dim, dtype=int), f0)
    state.J = 1
    state.k = 1

    reason = None
    while reason is None:
        if state.solved_at is not None:
            reason = STOP_SOLVED
        elif state.T >= stop.max_trials:
            reason = STOP_BUDGET
        else:
            progressed = _direct_iterate(state, cfg, objective, stop)
            if not progressed:
                reason = STOP_STAGNATION
    return RunResult(
        stop_reason=reason,
        trials=state.T,
        iterations=state.k,
        intervals=state.J,
        f_min=state.f_min,
        x_min=None,
        y_min=state.y_min,
        solved_at_trial=state.solved_at,
        trace=state.trace,
    )


def _direct_iterate(state: _DirectState, cfg: MgasConfig, objective, stop) -> bool:
    xi = cfg.epsilon * abs(state.f_min)
    passed = filter_improving(nondominated(state.group_minima()), state.f_min, xi)
    batch = [state.boxes[i] for i in passed.ids]
    if not batch:
        return False
    batch.sort(key=lambda b: (-b.measure, b.id))
    for box in batch:
        if state.T >= stop.max_trials:
            break
        _split_box(state, box, objective, stop)
    state.k += 1
    return True


def _split_box(state: _DirectState, box: BoxRecord, objective, stop) -> None:
    sides = box.side_lengths
    longest = sides.max()
    dims = [j for j in range(sides.shape[0]) if sides[j] == longest]
    delta = longest / 3.0

    sampled = []  # (w_j, j, f_minus, f_plus)
    for j in dims:
        left = box.center.copy()
        left[j] -= delta
        right = box.center.copy()
        right[j] += delta
        f_minus = state.trial(left, objective, stop)
        f_plus = state.trial(right, objective, stop)
        sampled.append((min(f_minus, f_plus), j, f_minus, f_plus))
    sampled.sort(key=lambda t: (t[0], t[1]))

    mid_levels = box.levels.copy()
    for _, j, f_minus, f_plus in sampled:
        mid_levels[j] += 1
        for sign, f in ((-1.0, f_minus), (1.0, f_plus)):
            c = box.center.copy()
            c[j] += sign * delta
            state.add_box(c, mid_levels.copy(), f)
    state.add_box(box.center, mid_levels, box.f_center)
    state.drop_box(box)
    state.J += 2 * len(sampled)
