"""Interval records and their representation in the Hoelder metric.

Each subinterval [a, b] of the search interval is drawn as a point (h, F):
h = ((b-a)/2)^(1/N) is the half-length measured in the Hoelder metric for
dimension N and F is the objective value at the interval midpoint. A slope
H >= 0 through such a point hits the vertical axis at the interval's
characteristic F - H*h, the minorant-derived lower bound used for selection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

@dataclass(frozen=True)
class IntervalRecord:
    """Trisection interval [a, b] with midpoint value f_mid and ternary depth."""

    id: int
    a: float
    b: float
    f_mid: float
    depth: int

    def __post_init__(self):
        if not 0.0 <= self.a < self.b <= 1.0:
            raise ValueError(f"invalid interval [{self.a}, {self.b}]")
        if self.depth < 0:
            raise ValueError("depth must be nonnegative")
        expected = 3.0 ** (-self.depth)
        # Endpoints are doubles of magnitude up to 1, so the achievable length
        # precision is a few ulps of 1.0, not of the (much smaller) length.
        slack = 4.0 * (math.ulp(1.0) + math.ulp(expected))
        if abs((self.b - self.a) - expected) > slack:
            raise ValueError(
                f"length {self.b - self.a!r} does not match 3^-{self.depth}"
            )

    @property
    def length(self) -> float:
        return self.b - self.a

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.a + self.b)


@dataclass(frozen=True)
class DiagramPoint:
    """One interval as the dot (h, F); h is cached at creation and never recomputed."""

    interval_id: int
    h: float
    F: float


def h_coordinate(interval: IntervalRecord, dim: int) -> float:
    """Hoelder-metric half-length ((b-a)/2)^(1/N); equals (b-a)/2 when N=1."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    return (0.5 * (interval.b - interval.a)) ** (1.0 / dim)


def h_for_depth(depth: int, dim: int) -> float:
    """h of any interval of length 3^-depth; one shared value per depth group."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    return (0.5 * 3.0 ** (-depth)) ** (1.0 / dim)


def diagram_point(interval: IntervalRecord, dim: int) -> DiagramPoint:
    return DiagramPoint(interval.id, h_coordinate(interval, dim), interval.f_mid)


def characteristic(point: DiagramPoint, h_estimate: float) -> float:
    """Lower bound F - H*h for the objective over the interval, given estimate H >= 0."""
    if h_estimate < 0:
        raise ValueError("Hoelder-constant estimate must be >= 0")
    return point.F - h_estimate * point.h


def holder_constant_from_lipschitz(lipschitz: float, dim: int) -> float:
    """Hoelder constant 2*L*sqrt(N+3) inherited through the curve reduction."""
    if lipschitz <= 0:
        raise ValueError("Lipschitz constant must be positive")
    if dim < 1:
        raise ValueError("dim must be >= 1")
    return 2.0 * lipschitz * math.sqrt(dim + 3)


DIAGRAM_CSV_HEADER = "id,a,b,f_mid,h"


def snapshot_rows(intervals, dim: int) -> list[str]:
    """CSV rows `id,a,b,f_mid,h` for a set of intervals, sorted by id.

    h comes from the interval depth, so equal-length intervals serialize
    bit-identical coordinates, exactly as the selection logic sees them.
    """
    rows = []
    for iv in sorted(intervals, key=lambda r: r.id):
        h = h_for_depth(iv.depth, dim)
        rows.append(f"{iv.id},{iv.a!r},{iv.b!r},{iv.f_mid!r},{h!r}")
    return rows
