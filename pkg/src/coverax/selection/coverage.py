"""Candidate ball radii, dilation, and the sample/ball coverage matrix."""

from __future__ import annotations

import numpy as np
from scipy import sparse
from scipy.spatial import cKDTree

from ..errors import EmptySet, NegativeDilation


def compute_radii(candidate_points: np.ndarray, sample_points: np.ndarray) -> np.ndarray:
    """radii[i] = exact min distance from candidate i to the sample set."""
    candidate_points = np.asarray(candidate_points, dtype=np.float64).reshape(-1, 3)
    sample_points = np.asarray(sample_points, dtype=np.float64).reshape(-1, 3)
    if len(candidate_points) == 0 or len(sample_points) == 0:
        raise EmptySet("compute_radii needs nonempty candidates and samples")
    dist, _ = cKDTree(sample_points).query(candidate_points, k=1)
    return np.asarray(dist, dtype=np.float64)


def dilate_radii(radii: np.ndarray, delta_r: float, mode: str = "offset") -> np.ndarray:
    """r' = r + delta_r (offset) or r * (1 + delta_r) (scale)."""
    if delta_r < 0:
        raise NegativeDilation(f"delta_r must be >= 0, got {delta_r}")
    radii = np.asarray(radii, dtype=np.float64)
    if mode == "offset":
        return radii + delta_r
    if mode == "scale":
        return radii * (1.0 + delta_r)
    raise ValueError(f"unknown dilation mode: {mode!r}")


class CoverageMatrix:
    """Sparse boolean incidence d_ji between samples j and dilated balls i.

    Entry is 1 iff ||p_i - s_j|| <= r'_i (boundary counts as covered).
    Row view: sample -> covering candidates (CSR of the m x n matrix).
    Column view: candidate -> covered samples (CSC of the same matrix).
    """

    def __init__(self, rows: sparse.csr_matrix):
        self.rows = rows.tocsr()
        self.cols = rows.tocsc()
        self.m, self.n = rows.shape

    def covered_samples(self, candidate: int) -> np.ndarray:
        """Sample indices covered by one candidate's dilated ball."""
        return self.cols.indices[
            self.cols.indptr[candidate] : self.cols.indptr[candidate + 1]
        ]

    def covering_candidates(self, sample: int) -> np.ndarray:
        """Candidate indices whose dilated ball covers one sample."""
        return self.rows.indices[self.rows.indptr[sample] : self.rows.indptr[sample + 1]]

    def column_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) of the candidate -> samples view."""
        return self.cols.indptr, self.cols.indices

    def dense(self) -> np.ndarray:
        return np.asarray(self.rows.todense(), dtype=bool)


def build_coverage_matrix(
    candidate_points: np.ndarray,
    dilated_radii: np.ndarray,
    sample_points: np.ndarray,
) -> CoverageMatrix:
    """Exact sparse incidence via a kd-tree range query per candidate."""
    candidate_points = np.asarray(candidate_points, dtype=np.float64).reshape(-1, 3)
    sample_points = np.asarray(sample_points, dtype=np.float64).reshape(-1, 3)
    dilated_radii = np.asarray(dilated_radii, dtype=np.float64).reshape(-1)
    n = len(candidate_points)
    m = len(sample_points)
    tree = cKDTree(sample_points)
    hits = tree.query_ball_point(candidate_points, dilated_radii)
    indptr = np.zeros(n + 1, dtype=np.int64)
    for i, h in enumerate(hits):
        indptr[i + 1] = indptr[i] + len(h)
    indices = np.empty(indptr[-1], dtype=np.int32)
    for i, h in enumerate(hits):
        indices[indptr[i] : indptr[i + 1]] = sorted(h)
    data = np.ones(len(indices), dtype=np.int8)
    csc = sparse.csc_matrix((data, indices, indptr), shape=(m, n))
    return CoverageMatrix(csc.tocsr())
