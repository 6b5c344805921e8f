"""Regular triangulation (dual of the power diagram) of weighted points.

Built by lifting each weighted point (x, w) to 4D at height |x|^2 - w and
taking the lower convex hull; its facets are exactly the tetrahedra with
the empty-orthosphere property.  Submerged points simply get no cell and
end up isolated.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from ..errors import DegenerateInput, NonpositiveFactor

PERTURBATION_SCALE = 1e-9
_MAX_PERTURB_ATTEMPTS = 3


@dataclass
class WeightedPoint:
    """A power-diagram generator: ball center + squared-radius weight."""

    position: np.ndarray
    weight: float
    tag: str  # "inner" | "surface"
    source_index: int

    def __post_init__(self):
        self.position = np.asarray(self.position, dtype=np.float64).reshape(3)
        if self.tag not in ("inner", "surface"):
            raise ValueError(f"unknown tag: {self.tag!r}")


@dataclass
class RTResult:
    tetrahedra: np.ndarray  # (nt, 4) indices into the input points
    perturbed: bool = False
    perturbation_seed: int | None = None
    _edges: set = field(default=None, repr=False)

    def edges(self) -> set[tuple[int, int]]:
        if self._edges is None:
            pairs = set()
            for tet in self.tetrahedra:
                t = sorted(int(v) for v in tet)
                for a in range(4):
                    for b in range(a + 1, 4):
                        pairs.add((t[a], t[b]))
            self._edges = pairs
        return self._edges

    def triangles(self) -> set[tuple[int, int, int]]:
        faces = set()
        for tet in self.tetrahedra:
            t = sorted(int(v) for v in tet)
            for skip in range(4):
                faces.add(tuple(v for i, v in enumerate(t) if i != skip))
        return faces


def inner_weighted_points(selected_balls, factor: float = 1.0) -> list[WeightedPoint]:
    """Weighted generators for selected balls: weight = (factor * r')^2.

    selected_balls: iterable of (center, r, r_dilated).
    """
    if factor <= 0:
        raise NonpositiveFactor(f"factor must be > 0, got {factor}")
    return [
        WeightedPoint(center, (factor * r_dil) ** 2, "inner", i)
        for i, (center, _r, r_dil) in enumerate(selected_balls)
    ]


def adjust_connection_radii(selected_balls, factor: float) -> list[WeightedPoint]:
    """Alias of inner_weighted_points; surface weights are built separately
    (surface_weighted_points) and are unaffected by the factor."""
    return inner_weighted_points(selected_balls, factor)


def surface_weighted_points(sample_points, delta_r: float, offset: int = 0) -> list[WeightedPoint]:
    """Weighted generators for surface samples: weight = delta_r^2."""
    sample_points = np.asarray(sample_points, dtype=np.float64).reshape(-1, 3)
    return [
        WeightedPoint(p, delta_r * delta_r, "surface", offset + j)
        for j, p in enumerate(sample_points)
    ]


def _lifted(positions: np.ndarray, weights: np.ndarray) -> np.ndarray:
    height = np.einsum("ij,ij->i", positions, positions) - weights
    return np.column_stack([positions, height])


def _lower_hull_tetrahedra(positions: np.ndarray, weights: np.ndarray) -> np.ndarray:
    hull = ConvexHull(_lifted(positions, weights), qhull_options="Qt")
    lower = hull.equations[:, 3] < -1e-12  # facets facing -height
    tets = hull.simplices[lower]
    # drop slivers that are flat in 3D
    keep = []
    for tet in tets:
        a, b, c, d = positions[tet]
        vol = abs(np.linalg.det(np.stack([b - a, c - a, d - a])))
        if vol > 1e-14:
            keep.append(sorted(int(v) for v in tet))
    if not keep:
        return np.empty((0, 4), dtype=np.int64)
    return np.unique(np.asarray(keep, dtype=np.int64), axis=0)


def regular_triangulation(points: list[WeightedPoint], seed: int = 0) -> RTResult:
    """Tetrahedra of the regular triangulation of weighted points.

    Degenerate inputs get a deterministic seeded perturbation of magnitude
    1e-9 x bbox diagonal, recorded in the result.
    """
    if len(points) < 4:
        raise DegenerateInput(f"need >= 4 weighted points, got {len(points)}")
    positions = np.array([p.position for p in points])
    weights = np.array([p.weight for p in points])

    if len(points) == 4:
        vol = abs(
            np.linalg.det(
                np.stack([positions[k] - positions[0] for k in (1, 2, 3)])
            )
        )
        if vol <= 1e-14:
            raise DegenerateInput("4 coplanar weighted points")
        return RTResult(np.array([[0, 1, 2, 3]], dtype=np.int64))

    try:
        return RTResult(_lower_hull_tetrahedra(positions, weights))
    except QhullError:
        pass

    diag = float(np.linalg.norm(positions.max(axis=0) - positions.min(axis=0)))
    rng = np.random.default_rng(seed)
    for _ in range(_MAX_PERTURB_ATTEMPTS):
        jitter = (rng.random(positions.shape) - 0.5) * 2 * PERTURBATION_SCALE * max(diag, 1.0)
        try:
            tets = _lower_hull_tetrahedra(positions + jitter, weights)
            return RTResult(tets, perturbed=True, perturbation_seed=seed)
        except QhullError:
            continue
    raise DegenerateInput("weighted points remain degenerate after perturbation")
