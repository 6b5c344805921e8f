"""Area-weighted surface sampling.

All randomness goes through numpy's default_rng (PCG64), which is portable
across platforms for a fixed seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import EmptyShape
from .cloud import OrientedPointCloud
from .mesh import TriangleMesh


@dataclass
class SurfaceSamples:
    """The sampled boundary point set S."""

    points: np.ndarray           # (m, 3)
    source: str                  # "mesh" | "cloud"
    seed: int
    triangle_ids: np.ndarray | None = None  # mesh provenance

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=np.float64).reshape(-1, 3)

    def __len__(self) -> int:
        return len(self.points)


def sample_surface(mesh: TriangleMesh, m: int, seed: int = 0) -> SurfaceSamples:
    """Draw m points area-weighted uniformly on the mesh surface."""
    if m < 1:
        raise ValueError("m must be >= 1")
    areas = mesh.triangle_areas
    total = areas.sum()
    if len(mesh.triangles) == 0 or total <= 0:
        raise EmptyShape("mesh has no area to sample")
    rng = np.random.default_rng(seed)
    tri_ids = rng.choice(len(areas), size=m, p=areas / total)
    u = rng.random(m)
    v = rng.random(m)
    flip = u + v > 1.0
    u[flip] = 1.0 - u[flip]
    v[flip] = 1.0 - v[flip]
    a = mesh.vertices[mesh.triangles[tri_ids, 0]]
    b = mesh.vertices[mesh.triangles[tri_ids, 1]]
    c = mesh.vertices[mesh.triangles[tri_ids, 2]]
    pts = a + u[:, None] * (b - a) + v[:, None] * (c - a)
    return SurfaceSamples(pts, source="mesh", seed=seed, triangle_ids=tri_ids)


def sample_cloud(cloud: OrientedPointCloud, m: int, seed: int = 0) -> SurfaceSamples:
    """Draw m surface samples from a point cloud (without replacement when possible)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    rng = np.random.default_rng(seed)
    n = len(cloud.points)
    idx = rng.choice(n, size=m, replace=m > n)
    return SurfaceSamples(cloud.points[idx], source="cloud", seed=seed)
