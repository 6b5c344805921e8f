"""Interior candidate generation by bbox rejection sampling."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import RejectionStarvation
from .winding import winding_numbers

MAX_TRIALS = 10_000_000
_MIN_ACCEPT_RATE = 1e-4
_RATE_CHECK_AFTER = 100_000


@dataclass
class CandidateSet:
    """Interior candidate points P with raw and dilated radii."""

    points: np.ndarray                     # (n, 3)
    radii: np.ndarray | None = None        # R, distance to S
    dilated_radii: np.ndarray | None = None  # R'
    dilation_mode: str = "offset"
    delta_r: float = 0.0

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=np.float64).reshape(-1, 3)
        if self.radii is not None:
            self.radii = np.asarray(self.radii, dtype=np.float64).reshape(-1)
        if self.dilated_radii is not None:
            self.dilated_radii = np.asarray(
                self.dilated_radii, dtype=np.float64
            ).reshape(-1)

    def __len__(self) -> int:
        return len(self.points)


def generate_candidates(
    shape,
    n: int,
    seed: int = 0,
    inside_threshold: float = 0.5,
    max_trials: int = MAX_TRIALS,
) -> CandidateSet:
    """Sample n points uniformly in the bbox, keeping winding number > threshold.

    Deterministic per seed.  Raises RejectionStarvation when the acceptance
    rate drops below 1e-4 or the trial cap is reached before n acceptances.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    lo, hi = shape.bbox
    rng = np.random.default_rng(seed)
    accepted: list[np.ndarray] = []
    got = 0
    trials = 0
    batch = max(1024, 2 * n)
    while got < n and trials < max_trials:
        batch = min(batch, max_trials - trials)
        pts = lo + rng.random((batch, 3)) * (hi - lo)
        trials += batch
        keep = winding_numbers(shape, pts) > inside_threshold
        if keep.any():
            accepted.append(pts[keep])
            got += int(keep.sum())
        if trials >= _RATE_CHECK_AFTER and got / trials < _MIN_ACCEPT_RATE:
            raise RejectionStarvation(
                f"interior acceptance rate {got / trials:.2e} < {_MIN_ACCEPT_RATE:g} "
                f"after {trials} trials"
            )
    if got < n:
        raise RejectionStarvation(
            f"only {got}/{n} interior candidates after {trials} trials"
        )
    points = np.concatenate(accepted)[:n]
    return CandidateSet(points)
