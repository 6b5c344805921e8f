"""Oriented point clouds."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from ..errors import EmptyShape, TooFewPoints


@dataclass
class OrientedPointCloud:
    """Points with optional unit normals and per-point area weights."""

    points: np.ndarray
    normals: np.ndarray | None = None
    areas: np.ndarray | None = None

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=np.float64).reshape(-1, 3)
        if len(self.points) < 4:
            raise TooFewPoints(f"need >= 4 points, got {len(self.points)}")
        if self.normals is not None:
            self.normals = np.asarray(self.normals, dtype=np.float64).reshape(-1, 3)
            norms = np.linalg.norm(self.normals, axis=1)
            if np.any(norms <= 0):
                raise EmptyShape("zero-length normal")
            self.normals = self.normals / norms[:, None]
        if self.areas is not None:
            self.areas = np.asarray(self.areas, dtype=np.float64).reshape(-1)

    @property
    def bbox(self) -> tuple[np.ndarray, np.ndarray]:
        return self.points.min(axis=0), self.points.max(axis=0)

    @property
    def bbox_diagonal(self) -> float:
        lo, hi = self.bbox
        return float(np.linalg.norm(hi - lo))

    def with_estimated_areas(self, k: int = 8) -> "OrientedPointCloud":
        """Fill missing per-point areas as pi * d_k^2 / k, d_k = kth-NN distance."""
        if self.areas is not None:
            return self
        kq = min(k + 1, len(self.points))
        dists, _ = cKDTree(self.points).query(self.points, k=kq)
        dk = dists[:, -1]
        areas = np.pi * dk * dk / k
        return OrientedPointCloud(self.points, self.normals, areas)
