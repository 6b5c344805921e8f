"""The greedy skeletal-point selection loop and the set-cover baseline."""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from ..errors import EmptyCandidates
from .backend import get_backend
from .coverage import CoverageMatrix
from .scoring import SelectionConfig, SelectionState

TRACE_FIELDS = (
    "k",
    "chosen_index",
    "raw_cove",
    "raw_unif",
    "std_cove",
    "std_unif",
    "score",
    "uncovered_remaining",
)


@dataclass
class TraceRow:
    k: int
    chosen_index: int
    raw_cove: float
    raw_unif: float
    std_cove: float
    std_unif: float
    score: float
    uncovered_remaining: int

    def astuple(self):
        return (
            self.k,
            self.chosen_index,
            self.raw_cove,
            self.raw_unif,
            self.std_cove,
            self.std_unif,
            self.score,
            self.uncovered_remaining,
        )


@dataclass
class SelectionResult:
    state: SelectionState
    trace: list[TraceRow]
    backend: str

    @property
    def selected(self) -> list[int]:
        return self.state.selected

    @property
    def coverage_rate(self) -> float:
        return 1.0 - self.state.uncovered.sum() / self.state.n_samples


def select_skeletal_points(
    candidate_points: np.ndarray,
    matrix: CoverageMatrix,
    config: SelectionConfig,
    backend: str = "auto",
) -> SelectionResult:
    """Run the greedy loop: per iteration, standardize coverage and
    uniformity over the unselected candidates, combine with weight omega,
    and take the best-scoring candidate (ties to the lowest index).

    Stops when every sample is covered or target_v points are selected.
    """
    candidate_points = np.asarray(candidate_points, dtype=np.float64).reshape(-1, 3)
    if len(candidate_points) == 0:
        raise EmptyCandidates("no candidates to select from")
    if matrix.n != len(candidate_points):
        raise ValueError("coverage matrix does not match the candidate count")

    mod = get_backend(backend)
    indptr, indices = matrix.column_arrays()
    out = mod.run_selection(
        indptr,
        indices,
        matrix.m,
        candidate_points,
        config.target_v,
        config.omega,
        config.argmin,
    )
    state = SelectionState(
        n_candidates=matrix.n,
        n_samples=matrix.m,
        selected=[int(i) for i in out["selected"]],
        remaining=out["remaining"],
        uncovered=out["uncovered"],
        k=out["k"],
        last_scores=out["last_scores"],
    )
    trace = [TraceRow(*row) for row in out["trace"]]
    return SelectionResult(state=state, trace=trace, backend=mod.NAME)


def write_trace_csv(path, trace: list[TraceRow]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(TRACE_FIELDS)
        for row in trace:
            writer.writerow(row.astuple())


@dataclass
class GreedyCoverResult:
    selected: list[int]
    uncovered: list[int]  # samples no candidate covers (infeasible leftovers)

    @property
    def feasible(self) -> bool:
        return not self.uncovered


def greedy_scp_baseline(matrix: CoverageMatrix, max_points: int | None = None) -> GreedyCoverResult:
    """Classic greedy set cover over the coverage matrix.

    Repeatedly picks the candidate covering the most uncovered samples
    (ties to the lowest index) until everything is covered or max_points is
    reached.  Samples covered by no candidate are reported, not fatal.
    """
    if matrix.n == 0 or matrix.m == 0:
        raise EmptyCandidates("empty coverage matrix")
    if max_points is None:
        max_points = matrix.n

    coverable = np.asarray(matrix.rows.sum(axis=1)).ravel() > 0
    uncovered = coverable.copy()
    remaining = np.ones(matrix.n, dtype=bool)
    selected: list[int] = []
    while uncovered.any() and len(selected) < max_points:
        counts = matrix.cols.T.dot(uncovered.astype(np.float64))
        counts[~remaining] = -1.0
        best = int(np.argmax(counts))
        if counts[best] <= 0:
            break
        selected.append(best)
        remaining[best] = False
        uncovered[matrix.covered_samples(best)] = False
    infeasible = np.flatnonzero(~coverable).tolist()
    leftover = sorted(set(infeasible) | set(np.flatnonzero(uncovered).tolist()))
    return GreedyCoverResult(selected=selected, uncovered=leftover)
