"""Level-M approximations of the Hilbert space-filling curve over a box in R^N.

The unit interval [0,1] is split into 2^(N*M) equal cells; cell i is sent to
the center of the i-th subcube (side 2^-M per axis) visited by the level-M
Hilbert curve. Consecutive cells map to face-adjacent subcubes, the curve
enters at the box_lo corner, and the whole mapping is a pure function of the
cell index.

Index decoding uses the Gray-code / bit-transposition construction: the cell
index is Gray-encoded, its bits are distributed round-robin over the N axis
words, and the per-level reflections of the recursive construction are then
undone with masked swaps.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

import numpy as np


def index_bit_budget() -> int:
    """Bit width G usable for a cell index, from the float mantissa (52 for IEEE doubles).

    Cell lookup is floor(x * 2^(N*M)); keeping N*M <= G keeps that product
    inside the exactly-representable integer range of the abscissa type.
    """
    return sys.float_info.mant_dig - 1


#: Largest N*M accepted when constructing a CurveMap.
MAX_INDEX_BITS = index_bit_budget()

#: Abscissas this far outside [0,1] are clamped; farther out is an error.
DOMAIN_TOL = 1e-12


@dataclass(frozen=True)
class CurveMap:
    """Level-`level` Hilbert curve approximation filling the box [box_lo, box_hi] in R^dim."""

    dim: int
    level: int
    box_lo: np.ndarray
    box_hi: np.ndarray

    def __init__(self, dim, level, box_lo=None, box_hi=None):
        if dim < 1:
            raise ValueError(f"dim must be >= 1, got {dim}")
        if level < 1:
            raise ValueError(f"level must be >= 1, got {level}")
        if dim * level > MAX_INDEX_BITS:
            raise ValueError(
                f"dim*level = {dim * level} exceeds the {MAX_INDEX_BITS}-bit cell-index budget"
            )
        lo = np.zeros(dim) if box_lo is None else np.asarray(box_lo, dtype=float).copy()
        hi = np.ones(dim) if box_hi is None else np.asarray(box_hi, dtype=float).copy()
        if lo.shape != (dim,) or hi.shape != (dim,):
            raise ValueError(f"box corners must be vectors of length {dim}")
        if not np.all(lo < hi):
            raise ValueError("box_lo must be strictly below box_hi in every coordinate")
        lo.setflags(write=False)
        hi.setflags(write=False)
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "level", int(level))
        object.__setattr__(self, "box_lo", lo)
        object.__setattr__(self, "box_hi", hi)

    @property
    def num_cells(self) -> int:
        return 1 << (self.dim * self.level)

    @property
    def cells_per_axis(self) -> int:
        return 1 << self.level

    def cell_index(self, x: float) -> int:
        """Cell index floor(x * 2^(N*M)) of an abscissa, clamped to the last cell at x=1."""
        x = self._check_abscissa(x)
        i = int(x * self.num_cells)
        return min(i, self.num_cells - 1)

    def cell_center(self, i: int) -> np.ndarray:
        """Center of the subcube visited at curve position i."""
        if not 0 <= i < self.num_cells:
            raise ValueError(f"cell index {i} outside [0, {self.num_cells})")
        axes = _decode_index(i, self.level, self.dim)
        unit = (np.array(axes, dtype=float) + 0.5) / self.cells_per_axis
        return self.box_lo + unit * (self.box_hi - self.box_lo)

    def map(self, x: float) -> np.ndarray:
        """Image of abscissa x: the center of the subcube whose curve cell contains x."""
        return self.cell_center(self.cell_index(x))

    def cell_centers(self, indices: np.ndarray) -> np.ndarray:
        """Vectorized cell_center over an integer array; returns shape (len(indices), dim)."""
        idx = np.asarray(indices, dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= self.num_cells):
            raise ValueError("cell index outside the curve range")
        axes = _decode_indices(idx, self.level, self.dim)
        unit = (axes.astype(float) + 0.5) / self.cells_per_axis
        return self.box_lo + unit * (self.box_hi - self.box_lo)

    def map_many(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized map over an abscissa array; returns shape (len(xs), dim)."""
        xs = np.asarray(xs, dtype=float)
        if xs.size and (xs.min() < -DOMAIN_TOL or xs.max() > 1.0 + DOMAIN_TOL):
            raise ValueError("abscissa outside [0, 1]")
        idx = (np.clip(xs, 0.0, 1.0) * self.num_cells).astype(np.int64)
        idx = np.minimum(idx, self.num_cells - 1)
        return self.cell_centers(idx)

    def _check_abscissa(self, x: float) -> float:
        if not -DOMAIN_TOL <= x <= 1.0 + DOMAIN_TOL:
            raise ValueError(f"abscissa {x!r} outside [0, 1]")
        return min(max(x, 0.0), 1.0)


def _decode_index(i: int, level: int, dim: int) -> list[int]:
    """Hilbert index -> per-axis grid coordinates, scalar path (plain ints)."""
    gray = i ^ (i >> 1)
    total = dim * level
    # Distribute Gray-code bits round-robin: MSB-first bit p feeds axis p % dim.
    axes = [0] * dim
    for p in range(total):
        if (gray >> (total - 1 - p)) & 1:
            axes[p % dim] |= 1 << (level - 1 - p // dim)
    # Undo the per-level reflections, coarsest excess first.
    q = 2
    top = 1 << level
    while q < top:
        mask = q - 1
        for j in range(dim - 1, -1, -1):
            if axes[j] & q:
                axes[0] ^= mask
            else:
                t = (axes[0] ^ axes[j]) & mask
                axes[0] ^= t
                axes[j] ^= t
        q <<= 1
    return axes


def _decode_indices(idx: np.ndarray, level: int, dim: int) -> np.ndarray:
    """Vectorized _decode_index; returns int64 array of shape (len(idx), dim)."""
    gray = idx ^ (idx >> 1)
    total = dim * level
    axes = np.zeros((dim, idx.shape[0]), dtype=np.int64)
    for p in range(total):
        bit = (gray >> (total - 1 - p)) & 1
        axes[p % dim] |= bit << (level - 1 - p // dim)
    q = np.int64(2)
    top = 1 << level
    while q < top:
        mask = q - 1
        for j in range(dim - 1, -1, -1):
            invert = (axes[j] & q) != 0
            swap = np.where(invert, 0, (axes[0] ^ axes[j]) & mask)
            axes[0] ^= np.where(invert, mask, 0)
            axes[0] ^= swap
            axes[j] ^= swap
        q <<= 1
    return axes.T
