"""Per-iteration scores: coverage, uniformity, standardization, combination."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import LengthMismatch
from .coverage import CoverageMatrix

ZERO_STD_TOL = 1e-12


@dataclass
class SelectionConfig:
    target_v: int
    omega: float = 1.0
    delta_r: float = 0.02
    dilation_mode: str = "offset"
    argmin: bool = False  # keep the literal pseudo-code variant available

    def __post_init__(self):
        if self.target_v < 1:
            raise ValueError("target_v must be >= 1")
        if self.omega < 0:
            raise ValueError("omega must be >= 0")
        if self.delta_r < 0:
            raise ValueError("delta_r must be >= 0")
        if self.dilation_mode not in ("offset", "scale"):
            raise ValueError(f"unknown dilation mode: {self.dilation_mode!r}")


@dataclass
class SelectionState:
    """Evolving partition of candidates plus the uncovered sample set."""

    n_candidates: int
    n_samples: int
    selected: list[int] = field(default_factory=list)
    remaining: np.ndarray = None  # bool mask over candidates
    uncovered: np.ndarray = None  # bool mask over samples
    k: int = 1                    # 1-based iteration counter
    last_scores: dict | None = None

    def __post_init__(self):
        if self.remaining is None:
            self.remaining = np.ones(self.n_candidates, dtype=bool)
        if self.uncovered is None:
            self.uncovered = np.ones(self.n_samples, dtype=bool)

    @property
    def remaining_indices(self) -> np.ndarray:
        return np.flatnonzero(self.remaining)

    @property
    def uncovered_indices(self) -> np.ndarray:
        return np.flatnonzero(self.uncovered)


def coverage_scores(matrix: CoverageMatrix, state: SelectionState) -> np.ndarray:
    """Number of still-uncovered samples each remaining candidate covers."""
    unc = state.uncovered.astype(np.float64)
    counts = matrix.cols.T.dot(unc)  # O(nnz)
    return counts[state.remaining]


def uniformity_scores(candidate_points: np.ndarray, state: SelectionState) -> np.ndarray:
    """Distance from each remaining candidate to the nearest selected point.

    All zeros in the first iteration (no point selected yet); any constant
    works there since zero-variance standardization maps it to zeros.
    """
    candidate_points = np.asarray(candidate_points, dtype=np.float64)
    rem = state.remaining_indices
    if not state.selected:
        return np.zeros(len(rem))
    sel = candidate_points[state.selected]
    diffs = candidate_points[rem][:, None, :] - sel[None, :, :]
    return np.linalg.norm(diffs, axis=2).min(axis=1)


def standardize(values: np.ndarray) -> np.ndarray:
    """(v - mean) / sample std; all zeros when length 1 or std < 1e-12."""
    values = np.asarray(values, dtype=np.float64)
    if values.ndim != 1 or len(values) < 1:
        raise ValueError("standardize expects a nonempty 1-D vector")
    if len(values) == 1:
        return np.zeros(1)
    std = values.std(ddof=1)
    if std < ZERO_STD_TOL:
        return np.zeros(len(values))
    return (values - values.mean()) / std


def final_scores(cove_std: np.ndarray, unif_std: np.ndarray, omega: float) -> np.ndarray:
    """Score = standardized coverage + omega * standardized uniformity."""
    cove_std = np.asarray(cove_std, dtype=np.float64)
    unif_std = np.asarray(unif_std, dtype=np.float64)
    if cove_std.shape != unif_std.shape:
        raise LengthMismatch(
            f"score vectors differ in length: {cove_std.shape} vs {unif_std.shape}"
        )
    return cove_std + omega * unif_std
