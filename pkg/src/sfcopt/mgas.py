"""Driver reducing N-dimensional Lipschitz minimization to one dimension.

The objective F is composed with a level-M Hilbert curve approximation,
f(x) = F(p_M(x)), and f is minimized over [0,1] by center-sampling
trisection: every iteration draws the current intervals in the Hoelder
metric, selects the nondominated ones that predict a sufficient improvement
(threshold xi = epsilon*|f_min|) and are longer than eta, and trisects each,
spending two new trials on the outer children while the middle child
inherits the parent's midpoint value.

Intervals are tracked by their exact ternary address (index j, depth d),
i.e. [j*3^-d, (j+1)*3^-d], so lengths, midpoints, and the disjoint cover
stay exact no matter how deep the partition gets. Intervals shorter than
LENGTH_FLOOR are never subdivided: below that scale trial abscissas collapse
in double precision, so further splitting cannot produce new information.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field

import numpy as np

from .curve import CurveMap, MAX_INDEX_BITS
from .diagram import DiagramPoint, IntervalRecord, h_for_depth
from .hull import HullSelection, filter_improving, nondominated, selection_rows
from .results import (
    STOP_BUDGET,
    STOP_SOLVED,
    STOP_STAGNATION,
    RunResult,
    StoppingRule,
    TrialRecord,
)

#: Intervals at or below this length are never subdivided; at 3^-31 the
#: midpoints of prospective children stop being distinct doubles.
LENGTH_FLOOR = 1e-14


def default_eta(dim: int) -> float:
    """Dimension-keyed default for the minimum subdividable length."""
    if dim <= 2:
        return 1e-4
    if dim == 3:
        return 1e-7
    return 1e-10


@dataclass(frozen=True)
class MgasConfig:
    """Run parameters; eta=None picks the dimension default."""

    dim: int
    level: int = 10
    epsilon: float = 1e-4
    eta: float | None = None
    max_trials: int = 1_000_000
    box_lo: np.ndarray | None = None
    box_hi: np.ndarray | None = None

    def __post_init__(self):
        if self.dim < 1 or self.level < 1:
            raise ValueError("dim and level must be >= 1")
        if self.dim * self.level > MAX_INDEX_BITS:
            raise ValueError(
                f"dim*level = {self.dim * self.level} exceeds the "
                f"{MAX_INDEX_BITS}-bit cell-index budget"
            )
        if self.epsilon < 0:
            raise ValueError("epsilon must be >= 0")
        if self.max_trials < 3:
            raise ValueError("max_trials must be >= 3")
        eta = default_eta(self.dim) if self.eta is None else float(self.eta)
        if eta < 0:
            raise ValueError("eta must be >= 0")
        object.__setattr__(self, "eta", eta)
        lo = np.full(self.dim, -1.0) if self.box_lo is None else np.asarray(self.box_lo, float)
        hi = np.full(self.dim, 1.0) if self.box_hi is None else np.asarray(self.box_hi, float)
        if lo.shape != (self.dim,) or hi.shape != (self.dim,) or not np.all(lo < hi):
            raise ValueError("box corners must be dim-vectors with box_lo < box_hi")
        object.__setattr__(self, "box_lo", lo)
        object.__setattr__(self, "box_hi", hi)

    def curve(self) -> CurveMap:
        return CurveMap(self.dim, self.level, self.box_lo, self.box_hi)


@dataclass
class _Node:
    """Alive interval [j*3^-depth, (j+1)*3^-depth] with its midpoint value."""

    id: int
    j: int
    depth: int
    f_mid: float

    @property
    def length(self) -> float:
        return 3.0 ** (-self.depth)

    def endpoints(self) -> tuple[float, float]:
        s = 3.0 ** (-self.depth)
        b = 1.0 if self.j + 1 == 3 ** self.depth else (self.j + 1) * s
        return self.j * s, b

    def midpoint(self) -> float:
        return (self.j + 0.5) * 3.0 ** (-self.depth)

    def record(self) -> IntervalRecord:
        a, b = self.endpoints()
        return IntervalRecord(self.id, a, b, self.f_mid, self.depth)


@dataclass
class OptimizerState:
    """Evolving partition of [0,1] plus counters, incumbent, and trace."""

    curve: CurveMap
    nodes: dict[int, _Node] = field(default_factory=dict)
    k: int = 0
    J: int = 0
    T: int = 0
    f_min: float = math.inf
    x_min: float = math.nan
    y_min: np.ndarray | None = None
    trace: list[TrialRecord] = field(default_factory=list)
    record_trace: bool = True
    solved_at: int | None = None
    stagnated: bool = False
    last_selection: HullSelection | None = None
    last_passed_ids: tuple[int, ...] = ()
    _next_id: int = 0
    _buckets: dict[int, list] = field(default_factory=dict)
    _alive_per_depth: dict[int, int] = field(default_factory=dict)
    _seen_keys: set = field(default_factory=set)

    @property
    def partition(self) -> list[IntervalRecord]:
        """Alive intervals as records, ordered by position."""
        return [n.record() for n in sorted(self.nodes.values(), key=lambda n: n.midpoint())]

    @property
    def max_length(self) -> float:
        return 3.0 ** (-min(d for d, c in self._alive_per_depth.items() if c > 0))

    def _add_node(self, j: int, depth: int, f_mid: float) -> _Node:
        node = _Node(self._next_id, j, depth, f_mid)
        self._next_id += 1
        self.nodes[node.id] = node
        heapq.heappush(self._buckets.setdefault(depth, []), (f_mid, node.id))
        self._alive_per_depth[depth] = self._alive_per_depth.get(depth, 0) + 1
        return node

    def _drop_node(self, node: _Node) -> None:
        del self.nodes[node.id]
        self._alive_per_depth[node.depth] -= 1

    def _group_minima(self) -> list[DiagramPoint]:
        """Per-depth (min f_mid, min id) representatives, h shared per depth."""
        reps = []
        for depth, heap in self._buckets.items():
            if self._alive_per_depth.get(depth, 0) == 0:
                continue
            while heap[0][1] not in self.nodes:
                heapq.heappop(heap)
            f, node_id = heap[0]
            reps.append(DiagramPoint(node_id, h_for_depth(depth, self.curve.dim), f))
        return reps

    def _trial(self, x: float, key: tuple[int, int], objective, stop: StoppingRule | None):
        y = self.curve.map(x)
        f = float(objective(y))
        self.T += 1
        if f < self.f_min:
            self.f_min, self.x_min, self.y_min = f, x, y
        if self.record_trace:
            num, depth = key
            while num % 3 == 0:
                num //= 3
                depth -= 1
            if (num, depth) in self._seen_keys:
                raise AssertionError(f"duplicate trial abscissa {x!r}")
            self._seen_keys.add((num, depth))
            self.trace.append(TrialRecord(self.T, x, y, f, self.f_min))
        if stop is not None and self.solved_at is None and stop.hit(y):
            self.solved_at = self.T
        return f


def initialize(cfg: MgasConfig, objective, *, stop: StoppingRule | None = None,
               record_trace: bool = True) -> OptimizerState:
    """Split [0,1] in three and evaluate the midpoints 1/6, 1/2, 5/6."""
    state = OptimizerState(curve=cfg.curve(), record_trace=record_trace)
    for j in range(3):
        f = state._trial((j + 0.5) / 3.0, (2 * j + 1, 1), objective, stop)
        state._add_node(j, 1, f)
    state.J = 3
    state.k = 1
    return state


def iterate(state: OptimizerState, cfg: MgasConfig, objective,
            stop: StoppingRule | None = None) -> OptimizerState:
    """One full sweep: select nondominated intervals, trisect each, update counters.

    The selection, the incumbent value, and xi are frozen at the start of the
    sweep; an empty selection marks the state stagnated and changes nothing.
    """
    xi = cfg.epsilon * abs(state.f_min)
    f_min_k = state.f_min
    sel = nondominated(state._group_minima())
    passed = filter_improving(sel, f_min_k, xi)
    state.last_selection = sel
    state.last_passed_ids = tuple(passed.ids)
    floor = max(cfg.eta, LENGTH_FLOOR)
    batch = [state.nodes[i] for i in passed.ids if state.nodes[i].length > floor]
    if not batch:
        state.stagnated = True
        return state
    batch.sort(key=lambda n: (n.depth, n.id))  # longest first, then smallest id
    budget = stop.max_trials if stop is not None else cfg.max_trials
    for node in batch:
        if state.T >= budget:
            break
        _subdivide(state, node, objective, stop)
    state.k += 1
    return state


def _subdivide(state: OptimizerState, node: _Node, objective, stop) -> None:
    j3, d = 3 * node.j, node.depth + 1
    f_left = state._trial((j3 + 0.5) * 3.0 ** (-d), (2 * j3 + 1, d), objective, stop)
    state._add_node(j3, d, f_left)
    state._add_node(j3 + 1, d, node.f_mid)
    f_right = state._trial((j3 + 2.5) * 3.0 ** (-d), (2 * j3 + 5, d), objective, stop)
    state._add_node(j3 + 2, d, f_right)
    state._drop_node(node)
    state.J += 2


def run(cfg: MgasConfig, objective, stop: StoppingRule | None = None, *,
        record_trace: bool = True, selection_log: list | None = None,
        final_partition: list | None = None) -> RunResult:
    """Iterate until the ball is hit, the trial budget runs out, or no interval
    is eligible for subdivision.

    A ball hit stops the run at the end of the iteration that produced it, so
    the reported trial count includes every trial of that iteration.
    """
    if stop is None:
        stop = StoppingRule(max_trials=cfg.max_trials)
    state = initialize(cfg, objective, stop=stop, record_trace=record_trace)
    reason = None
    while reason is None:
        if state.solved_at is not None:
            reason = STOP_SOLVED
        elif state.T >= stop.max_trials:
            reason = STOP_BUDGET
        else:
            iterate(state, cfg, objective, stop)
            if state.stagnated:
                reason = STOP_STAGNATION
            elif selection_log is not None and state.last_selection is not None:
                selection_log.extend(
                    selection_rows(state.k, state.last_selection, state.last_passed_ids)
                )
    if final_partition is not None:
        final_partition.extend(state.partition)
    return RunResult(
        stop_reason=reason,
        trials=state.T,
        iterations=state.k,
        intervals=state.J,
        f_min=state.f_min,
        x_min=state.x_min,
        y_min=state.y_min,
        solved_at_trial=state.solved_at,
        trace=state.trace,
    )


def global_lower_bound(u_star: float, lipschitz: float, cfg: MgasConfig) -> float:
    """Lower bound for F over the whole box, from a bound u_star along the curve.

    Any point of the box lies within half a curve-cell diagonal of a curve
    point, so the bound relaxes u_star by lipschitz times that distance:
    2^-(M+1) * ||box_hi - box_lo||.
    """
    if lipschitz <= 0:
        raise ValueError("Lipschitz constant must be positive")
    half_diagonal = 2.0 ** (-(cfg.level + 1)) * float(
        np.linalg.norm(cfg.box_hi - cfg.box_lo)
    )
    return u_star - lipschitz * half_diagonal
