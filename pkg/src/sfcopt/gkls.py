"""Seeded generator of multiextremal test functions with a known global minimum.

Each function is a paraboloid ||y - T||^2 + t over [-1,1]^N, distorted inside
m pairwise disjoint attraction balls. Ball i blends the paraboloid down to a
prescribed value f_i at the ball center via a cubic radial weight, so the
function stays continuous, equals the paraboloid outside every ball, and
attains its global minimum f* exactly at the first ball's center, which sits
at a prescribed distance d from the paraboloid vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: Class presets: dim, number of minima, global value f*, vertex distance d,
#: global attraction radius r*. Classes 1-2 are 2-D, 3-4 are 3-D, 5-6 are 4-D,
#: 7-8 are 5-D; the even/higher-index class of each pair is the harder one.
CLASS_PRESETS: dict[int, dict] = {
    1: dict(dim=2, num_minima=10, f_star=-1.0, dist_d=0.90, radius_r=0.20),
    2: dict(dim=2, num_minima=10, f_star=-1.0, dist_d=0.90, radius_r=0.10),
    3: dict(dim=3, num_minima=10, f_star=-1.0, dist_d=0.66, radius_r=0.20),
    4: dict(dim=3, num_minima=10, f_star=-1.0, dist_d=0.90, radius_r=0.20),
    5: dict(dim=4, num_minima=10, f_star=-1.0, dist_d=0.66, radius_r=0.20),
    6: dict(dim=4, num_minima=10, f_star=-1.0, dist_d=0.90, radius_r=0.20),
    7: dict(dim=5, num_minima=10, f_star=-1.0, dist_d=0.90, radius_r=0.40),
    8: dict(dim=5, num_minima=10, f_star=-1.0, dist_d=0.90, radius_r=0.30),
}

_VERTEX_VALUE = 0.0  # keeps the undistorted paraboloid region above every ball value
_BALL_GAP = 0.01
_MAX_ATTEMPTS = 2000
_DOMAIN_TOL = 1e-9


class GklsGenerationError(Exception):
    """Raised when a spec cannot be realized within the attempt budget."""


@dataclass(frozen=True)
class GklsClassSpec:
    """Generator parameters for one test function over [-1,1]^dim."""

    dim: int
    num_minima: int
    f_star: float
    dist_d: float
    radius_r: float
    seed: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if self.num_minima < 1:
            raise ValueError("num_minima must be >= 1")
        if self.f_star >= _VERTEX_VALUE - 0.02:
            raise ValueError("f_star must sit clearly below the paraboloid floor")
        if not 0 < self.radius_r < 1:
            raise ValueError("radius_r must be in (0, 1)")
        if not 0 < self.dist_d < 2:
            raise ValueError("dist_d must be in (0, 2)")


def class_spec(class_id: int, seed: int) -> GklsClassSpec:
    """Spec for one of the 8 preset classes."""
    if class_id not in CLASS_PRESETS:
        raise ValueError(f"unknown class {class_id}; presets are 1..8")
    return GklsClassSpec(seed=seed, **CLASS_PRESETS[class_id])


def function_seed(base_seed: int, class_id: int, index: int) -> int:
    """Portable per-function seed derived from (base seed, class, 1-based index)."""
    ss = np.random.SeedSequence([base_seed, class_id, index])
    return int(ss.generate_state(1)[0])


@dataclass(frozen=True)
class GklsFunction:
    """A generated test function; evaluation is pure and the minimum is certified."""

    spec: GklsClassSpec
    vertex: np.ndarray
    vertex_value: float
    centers: np.ndarray  # (m, dim), row 0 is the global minimizer
    values: np.ndarray  # (m,), values[0] == f_star
    radii: np.ndarray  # (m,)

    @property
    def global_minimizer(self) -> np.ndarray:
        return self.centers[0]

    @property
    def dim(self) -> int:
        return self.spec.dim

    def __call__(self, y) -> float:
        return self.evaluate(y)

    def evaluate(self, y) -> float:
        """Function value at a point of the domain [-1,1]^dim."""
        y = np.asarray(y, dtype=float)
        if y.shape != (self.dim,):
            raise ValueError(f"point must have shape ({self.dim},)")
        if np.any(np.abs(y) > 1.0 + _DOMAIN_TOL):
            raise ValueError("point outside the domain [-1,1]^dim")
        # same elementary ops as evaluate_many so both paths agree bitwise
        diff = y - self.vertex
        z = float(np.sum(diff * diff)) + self.vertex_value
        for i in range(self.centers.shape[0]):
            delta = y - self.centers[i]
            dist = float(np.sqrt(np.sum(delta * delta)))
            if dist <= self.radii[i]:
                s = dist / self.radii[i]
                w = s * s * (3.0 - 2.0 * s)
                return float(self.values[i] + (z - self.values[i]) * w)
        return z

    def evaluate_many(self, ys: np.ndarray) -> np.ndarray:
        """Vectorized evaluate over rows of a (n, dim) array."""
        ys = np.asarray(ys, dtype=float)
        diff = ys - self.vertex
        z = np.sum(diff * diff, axis=1) + self.vertex_value
        out = z.copy()
        for i in range(self.centers.shape[0]):
            delta = ys - self.centers[i]
            d = np.sqrt(np.sum(delta * delta, axis=1))
            inside = d <= self.radii[i]
            if np.any(inside):
                s = d[inside] / self.radii[i]
                w = s * s * (3.0 - 2.0 * s)
                out[inside] = self.values[i] + (z[inside] - self.values[i]) * w
        return out

    def to_dict(self) -> dict:
        return {
            "spec": {
                "dim": self.spec.dim,
                "num_minima": self.spec.num_minima,
                "f_star": self.spec.f_star,
                "dist_d": self.spec.dist_d,
                "radius_r": self.spec.radius_r,
                "seed": self.spec.seed,
            },
            "vertex": self.vertex.tolist(),
            "vertex_value": self.vertex_value,
            "centers": self.centers.tolist(),
            "values": self.values.tolist(),
            "radii": self.radii.tolist(),
        }


def generate(spec: GklsClassSpec) -> GklsFunction:
    """Generate the function determined by the spec's seed.

    Raises GklsGenerationError when the attraction balls cannot be placed
    disjointly inside the domain within the attempt budget.
    """
    rng = np.random.default_rng(spec.seed)
    n, m = spec.dim, spec.num_minima

    vertex = None
    global_center = None
    for _ in range(_MAX_ATTEMPTS):
        candidate_vertex = rng.uniform(-0.5, 0.5, n)
        direction = rng.normal(size=n)
        norm = np.linalg.norm(direction)
        if norm == 0.0:
            continue
        candidate = candidate_vertex + spec.dist_d * direction / norm
        if np.all(np.abs(candidate) <= 1.0 - spec.radius_r):
            vertex = candidate_vertex
            global_center = candidate
            break
    if vertex is None:
        raise GklsGenerationError(
            f"could not place the global minimizer at distance {spec.dist_d} "
            f"with ball radius {spec.radius_r} inside the domain"
        )

    centers = [global_center]
    radii = [spec.radius_r]
    for _ in range(m - 1):
        placed = False
        for _ in range(_MAX_ATTEMPTS):
            rho = rng.uniform(0.4 * spec.radius_r, spec.radius_r)
            c = rng.uniform(-(1.0 - rho), 1.0 - rho, n)
            if np.linalg.norm(c - vertex) <= rho + _BALL_GAP:
                continue
            if any(
                np.linalg.norm(c - cj) < rho + rj + _BALL_GAP
                for cj, rj in zip(centers, radii)
            ):
                continue
            centers.append(c)
            radii.append(rho)
            placed = True
            break
        if not placed:
            raise GklsGenerationError(
                f"could not place {m} disjoint attraction balls (radius scale "
                f"{spec.radius_r}) in [-1,1]^{n}"
            )

    # Local values sit strictly between f* and the paraboloid floor, so the
    # global minimum can only live at the first ball's center.
    margin = 0.1 * (_VERTEX_VALUE - spec.f_star)
    values = np.empty(m)
    values[0] = spec.f_star
    if m > 1:
        values[1:] = rng.uniform(spec.f_star + margin, _VERTEX_VALUE - 0.01, m - 1)

    return GklsFunction(
        spec=spec,
        vertex=vertex,
        vertex_value=_VERTEX_VALUE,
        centers=np.vstack(centers),
        values=values,
        radii=np.array(radii),
    )
