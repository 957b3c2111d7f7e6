"""Shared test oracles: brute-force hull selection and random diagram generation."""

import numpy as np

from sfcopt.diagram import DiagramPoint, h_for_depth

#: Slope grid the selection oracle sweeps, log-spaced over twelve decades.
H_GRID = np.logspace(-6.0, 6.0, 10000)


def brute_force_selection(points):
    """Ids winning F - H*h for some grid slope H, under the documented tie rule.

    A point wins at H when it attains the strictly smallest characteristic;
    exact coordinate duplicates count as one class represented by the
    smallest id.
    """
    h = np.array([p.h for p in points])
    F = np.array([p.F for p in points])
    R = F[None, :] - H_GRID[:, None] * h[None, :]
    row_min = R.min(axis=1)
    winners = R == row_min[:, None]
    counts = winners.sum(axis=1)

    ids = set()
    single = np.flatnonzero(counts == 1)
    for row in single:
        ids.add(points[int(np.argmin(R[row]))].interval_id)
    for row in np.flatnonzero(counts > 1):
        tied = [points[j] for j in np.flatnonzero(winners[row])]
        if len({(p.h, p.F) for p in tied}) == 1:
            ids.add(min(p.interval_id for p in tied))
    return ids


def random_diagram(rng, max_points=50):
    """Diagram shaped like real trisection runs: few exact-h columns, spread F,
    plus occasional exact (h, F) duplicates exercising the id tie rule."""
    n = int(rng.integers(1, max_points + 1))
    dim = int(rng.integers(1, 6))
    depths = rng.integers(0, 9, n)
    values = rng.uniform(-1.0, 10.0, n)
    points = [
        DiagramPoint(i, h_for_depth(int(depths[i]), dim), float(values[i]))
        for i in range(n)
    ]
    if n > 1 and rng.random() < 0.4:
        twin = points[int(rng.integers(0, n))]
        points.append(DiagramPoint(n, twin.h, twin.F))
    return points
