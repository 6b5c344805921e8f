"""Exact nearest-neighbor queries over static point sets."""

from __future__ import annotations

import numpy as np
from scipy.spatial import cKDTree

from ..errors import EmptySet


class PointIndex:
    """Exact NN index (kd-tree).  Read-only after construction."""

    def __init__(self, points: np.ndarray):
        points = np.asarray(points, dtype=np.float64).reshape(-1, 3)
        if len(points) == 0:
            raise EmptySet("cannot index an empty point set")
        self.points = points
        self._tree = cKDTree(points)

    def nearest(self, queries: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """(distances, indices) of the exact nearest neighbor of each query.

        Ties are broken by lowest index.
        """
        queries = np.asarray(queries, dtype=np.float64).reshape(-1, 3)
        dist, idx = self._tree.query(queries, k=1)
        # cKDTree does not promise a tie-break order; resolve ties explicitly.
        ball = self._tree.query_ball_point(queries, dist + 1e-300)
        for q, members in enumerate(ball):
            if len(members) > 1:
                d = np.linalg.norm(self.points[members] - queries[q], axis=1)
                tied = [m for m, dm in zip(members, d) if dm <= dist[q] + 1e-15]
                if tied:
                    idx[q] = min(tied)
        return dist, idx

    def within(self, center: np.ndarray, radius: float) -> np.ndarray:
        """Indices of points with distance <= radius from center."""
        return np.asarray(
            self._tree.query_ball_point(np.asarray(center, dtype=np.float64), radius),
            dtype=np.int64,
        )


def nearest_distance(query, target_points) -> tuple[float, int]:
    """Exact nearest neighbor of a single query; ties broken by lowest index."""
    dist, idx = PointIndex(target_points).nearest(np.asarray(query).reshape(1, 3))
    return float(dist[0]), int(idx[0])
