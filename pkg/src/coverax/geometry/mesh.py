"""Triangle meshes (including triangle soups) and shape normalization."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import EmptyShape

DEGENERATE_AREA_TOL = 1e-12


@dataclass
class TriangleMesh:
    """An indexed triangle set.  Soups are fine: no manifoldness is assumed.

    ``vertices`` is (nv, 3) float64, ``triangles`` is (nt, 3) int64.
    ``dropped_degenerate`` counts zero-area triangles removed at load.
    """

    vertices: np.ndarray
    triangles: np.ndarray
    dropped_degenerate: int = 0
    _areas: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, dtype=np.float64).reshape(-1, 3)
        self.triangles = np.asarray(self.triangles, dtype=np.int64).reshape(-1, 3)
        if self.triangles.size and self.triangles.max() >= len(self.vertices):
            raise EmptyShape("triangle index out of range")

    @property
    def triangle_areas(self) -> np.ndarray:
        if self._areas is None:
            a, b, c = (self.vertices[self.triangles[:, k]] for k in range(3))
            self._areas = 0.5 * np.linalg.norm(np.cross(b - a, c - a), axis=1)
        return self._areas

    @property
    def bbox(self) -> tuple[np.ndarray, np.ndarray]:
        if len(self.vertices) == 0:
            raise EmptyShape("mesh has no vertices")
        return self.vertices.min(axis=0), self.vertices.max(axis=0)

    @property
    def bbox_diagonal(self) -> float:
        lo, hi = self.bbox
        return float(np.linalg.norm(hi - lo))

    def drop_degenerate(self) -> "TriangleMesh":
        """Return a mesh without zero-area triangles, recording the count."""
        keep = self.triangle_areas > DEGENERATE_AREA_TOL
        dropped = int((~keep).sum())
        if keep.all():
            return TriangleMesh(self.vertices, self.triangles, self.dropped_degenerate)
        return TriangleMesh(
            self.vertices,
            self.triangles[keep],
            self.dropped_degenerate + dropped,
        )


@dataclass
class NormalizeTransform:
    """Record of the uniform scale + translation applied by normalize_shape.

    Maps original coordinates x to x' = (x - offset) * scale.
    """

    offset: np.ndarray
    scale: float
    original_bbox_diagonal: float

    def apply(self, points: np.ndarray) -> np.ndarray:
        return (np.asarray(points, dtype=np.float64) - self.offset) * self.scale

    def invert(self, points: np.ndarray) -> np.ndarray:
        return np.asarray(points, dtype=np.float64) / self.scale + self.offset

    @classmethod
    def identity(cls) -> "NormalizeTransform":
        return cls(np.zeros(3), 1.0, float(np.sqrt(3.0)))


def _normalize_points(points: np.ndarray):
    if len(points) == 0:
        raise EmptyShape("cannot normalize an empty shape")
    lo = points.min(axis=0)
    hi = points.max(axis=0)
    extent = float((hi - lo).max())
    if extent <= 0.0:
        raise EmptyShape("degenerate bounding box (all points coincide)")
    scale = 1.0 / extent
    transform = NormalizeTransform(
        offset=lo, scale=scale, original_bbox_diagonal=float(np.linalg.norm(hi - lo))
    )
    return transform.apply(points), transform


def normalize_shape(shape):
    """Uniformly scale + translate so the bbox fits [0,1]^3.

    The longest axis spans exactly [0,1].  Returns (shape, transform).
    Works for TriangleMesh and OrientedPointCloud.
    """
    from .cloud import OrientedPointCloud

    if isinstance(shape, TriangleMesh):
        pts, transform = _normalize_points(shape.vertices)
        return (
            TriangleMesh(pts, shape.triangles, shape.dropped_degenerate),
            transform,
        )
    if isinstance(shape, OrientedPointCloud):
        pts, transform = _normalize_points(shape.points)
        return OrientedPointCloud(pts, shape.normals, shape.areas), transform
    raise TypeError(f"unsupported shape type: {type(shape)!r}")
