"""Pure-numpy implementation of the greedy selection loop.

Reference backend: the compiled kernel (coverax._fastsel) must agree with
this one.  See benchmarks/backend_compare.py for the speed comparison.
"""

from __future__ import annotations

import numpy as np
from scipy import sparse

from .scoring import ZERO_STD_TOL

NAME = "numpy"


def _standardize_inplace(v: np.ndarray) -> np.ndarray:
    if len(v) == 1:
        return np.zeros(1)
    std = v.std(ddof=1)
    if std < ZERO_STD_TOL:
        return np.zeros(len(v))
    return (v - v.mean()) / std


def run_selection(indptr, indices, m, points, target_v, omega, argmin=False):
    """Greedy coverage+uniformity selection over a CSC coverage matrix.

    indptr/indices: candidate -> covered-sample adjacency (n+1, nnz).
    Returns a dict with the selection order, per-iteration trace rows and
    the final masks.
    """
    indptr = np.asarray(indptr, dtype=np.int64)
    indices = np.asarray(indices, dtype=np.int32)
    points = np.asarray(points, dtype=np.float64).reshape(-1, 3)
    n = len(points)
    csc = sparse.csc_matrix(
        (np.ones(len(indices), dtype=np.float64), indices, indptr), shape=(m, n)
    )
    csr_t = csc.T.tocsr()  # candidate -> samples, for the fast count matvec

    uncovered = np.ones(m, dtype=bool)
    remaining = np.ones(n, dtype=bool)
    unif_min = np.zeros(n)
    selected: list[int] = []
    trace: list[tuple] = []
    last = {}

    k = 1
    while uncovered.any() and k <= target_v and remaining.any():
        rem_idx = np.flatnonzero(remaining)
        raw_cove_all = csr_t.dot(uncovered.astype(np.float64))
        raw_cove = raw_cove_all[rem_idx]
        raw_unif = unif_min[rem_idx] if selected else np.zeros(len(rem_idx))
        std_cove = _standardize_inplace(raw_cove)
        std_unif = _standardize_inplace(raw_unif)
        score = std_cove + omega * std_unif
        pick = int(np.argmin(score)) if argmin else int(np.argmax(score))
        chosen = int(rem_idx[pick])

        last = {
            "indices": rem_idx,
            "cove": raw_cove,
            "unif": raw_unif,
            "score": score,
        }
        selected.append(chosen)
        remaining[chosen] = False
        uncovered[indices[indptr[chosen] : indptr[chosen + 1]]] = False
        d = np.linalg.norm(points - points[chosen], axis=1)
        unif_min = d if len(selected) == 1 else np.minimum(unif_min, d)
        trace.append(
            (
                k,
                chosen,
                float(raw_cove[pick]),
                float(raw_unif[pick]),
                float(std_cove[pick]),
                float(std_unif[pick]),
                float(score[pick]),
                int(uncovered.sum()),
            )
        )
        k += 1

    return {
        "selected": np.asarray(selected, dtype=np.int64),
        "trace": trace,
        "uncovered": uncovered,
        "remaining": remaining,
        "k": k,
        "last_scores": last,
    }
