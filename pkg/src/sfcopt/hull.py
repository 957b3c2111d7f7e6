"""Nondominated-interval selection on the (h, F) diagram.

A diagram point is nondominated when some positive slope estimate H makes its
characteristic F - H*h strictly smallest over the whole diagram; those points
are exactly the vertices of the lower-right convex hull of the dot cloud,
found here by a gift-wrapping walk from the minimal-F dot to the maximal-h
dot. Ties are broken deterministically: within an equal-h column only the
(min F, min id) dot can win, and exactly collinear hull dots keep only the
chain vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .diagram import DiagramPoint


@dataclass(frozen=True)
class HullSelection:
    """Hull vertices in increasing h, each with the slope window (H_lo, H_hi) it wins on."""

    selected: tuple[DiagramPoint, ...]
    slopes: tuple[tuple[float, float], ...]

    @property
    def ids(self) -> list[int]:
        return [p.interval_id for p in self.selected]


def nondominated(points: list[DiagramPoint]) -> HullSelection:
    """Select the points whose characteristic is minimal for some slope H in (0, inf).

    Equal-h columns are collapsed to their (min F, min id) representative
    first; the walk then wraps the lower-right hull, skipping interior points
    of exactly collinear runs. The maximal-h representative is always
    selected (its window is unbounded above).
    """
    if not points:
        raise ValueError("empty diagram")
    if any(p.h <= 0 for p in points):
        raise ValueError("diagram points need h > 0")

    columns: dict[float, DiagramPoint] = {}
    for p in points:
        best = columns.get(p.h)
        if best is None or (p.F, p.interval_id) < (best.F, best.interval_id):
            columns[p.h] = p
    reps = sorted(columns.values(), key=lambda p: p.h)

    # Walk starts where H -> 0+ wins: minimal F, and the largest h among exact F ties.
    start = min(reps, key=lambda p: (p.F, -p.h))
    chain = [start]
    while True:
        cur = chain[-1]
        right = [p for p in reps if p.h > cur.h]
        if not right:
            break
        best, best_slope = None, math.inf
        for p in right:
            slope = (p.F - cur.F) / (p.h - cur.h)
            if slope < best_slope or (slope == best_slope and p.h > best.h):
                best, best_slope = p, slope
        chain.append(best)

    thresholds = [
        (chain[i + 1].F - chain[i].F) / (chain[i + 1].h - chain[i].h)
        for i in range(len(chain) - 1)
    ]
    slopes = tuple(
        (thresholds[i - 1] if i else 0.0, thresholds[i] if i < len(thresholds) else math.inf)
        for i in range(len(chain))
    )
    return HullSelection(tuple(chain), slopes)


def filter_improving(sel: HullSelection, f_min: float, xi: float) -> HullSelection:
    """Keep hull points predicting an improvement of at least xi below the incumbent.

    The characteristic decreases in H, so the existence test over a point's
    slope window reduces to one check at H_hi; the maximal-h point has
    H_hi = inf and always passes.
    """
    if xi < 0:
        raise ValueError("xi must be >= 0")
    keep_points, keep_slopes = [], []
    for p, (h_lo, h_hi) in zip(sel.selected, sel.slopes):
        if math.isinf(h_hi) or p.F - h_hi * p.h <= f_min - xi:
            keep_points.append(p)
            keep_slopes.append((h_lo, h_hi))
    return HullSelection(tuple(keep_points), tuple(keep_slopes))


SELECTION_CSV_HEADER = "iter,id,h,F,H_lo,H_hi,passed_xi"


def selection_rows(iteration: int, sel: HullSelection, passed_ids) -> list[str]:
    """CSV rows `iter,id,h,F,H_lo,H_hi,passed_xi` for one selection round."""
    passed = set(passed_ids)
    rows = []
    for p, (h_lo, h_hi) in zip(sel.selected, sel.slopes):
        hi = "inf" if math.isinf(h_hi) else repr(h_hi)
        rows.append(
            f"{iteration},{p.interval_id},{p.h!r},{p.F!r},{h_lo!r},{hi},"
            f"{int(p.interval_id in passed)}"
        )
    return rows
