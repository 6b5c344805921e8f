"""Reconstruction-fidelity metrics: Hausdorff errors and coverage rate."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from ..connectivity.skeleton import Skeleton
from ..errors import EmptySkeleton
from .envelope import Envelope, sample_envelope

DEFAULT_ENVELOPE_SAMPLES = 100_000


@dataclass
class ErrorReport:
    eps_s2r: float          # one-sided, surface -> reconstruction
    eps_r2s: float          # one-sided, reconstruction -> surface
    eps_two_sided: float    # max of the two
    coverage_rate: float
    bbox_diagonal: float
    sample_counts: tuple[int, int]  # (surface, envelope)

    def as_dict(self) -> dict:
        return {
            "eps_s2r": self.eps_s2r,
            "eps_r2s": self.eps_r2s,
            "eps_two_sided": self.eps_two_sided,
            "coverage_rate": self.coverage_rate,
            "bbox_diagonal": self.bbox_diagonal,
            "sample_counts": list(self.sample_counts),
        }


def hausdorff_errors(
    surface_points: np.ndarray,
    skeleton: Skeleton,
    bbox_diagonal: float,
    m_env: int = DEFAULT_ENVELOPE_SAMPLES,
    seed: int = 0,
    coverage_rate: float = float("nan"),
) -> ErrorReport:
    """Two-sided sampled Hausdorff error, normalized by the bbox diagonal.

    surface_points should be a dense sampling independent of the selection's
    surface set.
    """
    surface_points = np.asarray(surface_points, dtype=np.float64).reshape(-1, 3)
    if len(skeleton) == 0:
        raise EmptySkeleton("cannot evaluate an empty skeleton")
    env = Envelope(skeleton)
    eps_s2r = float(np.abs(env.distance(surface_points)).max()) / bbox_diagonal

    env_pts = sample_envelope(skeleton, m_env, seed=seed)
    d, _ = cKDTree(surface_points).query(env_pts, k=1)
    eps_r2s = float(d.max()) / bbox_diagonal

    return ErrorReport(
        eps_s2r=eps_s2r,
        eps_r2s=eps_r2s,
        eps_two_sided=max(eps_s2r, eps_r2s),
        coverage_rate=coverage_rate,
        bbox_diagonal=bbox_diagonal,
        sample_counts=(len(surface_points), int(m_env)),
    )


def coverage_rate(sample_points: np.ndarray, centers: np.ndarray, dilated_radii: np.ndarray) -> float:
    """Fraction of samples within at least one selected dilated ball."""
    sample_points = np.asarray(sample_points, dtype=np.float64).reshape(-1, 3)
    centers = np.asarray(centers, dtype=np.float64).reshape(-1, 3)
    dilated_radii = np.asarray(dilated_radii, dtype=np.float64).reshape(-1)
    m = len(sample_points)
    if m == 0:
        raise ValueError("no surface samples")
    if len(centers) == 0:
        return 0.0
    covered = np.zeros(m, dtype=bool)
    tree = cKDTree(sample_points)
    for c, r in zip(centers, dilated_radii):
        covered[tree.query_ball_point(c, r)] = True
    return float(covered.sum() / m)


def write_metrics_json(path, payload: dict) -> None:
    """Stable-key-order JSON for diffable runs."""
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
