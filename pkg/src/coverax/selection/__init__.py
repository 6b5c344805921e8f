from .backend import available_backends, default_backend_name, get_backend
from .coverage import CoverageMatrix, build_coverage_matrix, compute_radii, dilate_radii
from .greedy import (
    GreedyCoverResult,
    SelectionResult,
    TraceRow,
    greedy_scp_baseline,
    select_skeletal_points,
    write_trace_csv,
)
from .scoring import (
    SelectionConfig,
    SelectionState,
    coverage_scores,
    final_scores,
    standardize,
    uniformity_scores,
)

__all__ = [
    "CoverageMatrix",
    "GreedyCoverResult",
    "SelectionConfig",
    "SelectionResult",
    "SelectionState",
    "TraceRow",
    "available_backends",
    "build_coverage_matrix",
    "compute_radii",
    "coverage_scores",
    "default_backend_name",
    "dilate_radii",
    "final_scores",
    "get_backend",
    "greedy_scp_baseline",
    "select_skeletal_points",
    "standardize",
    "uniformity_scores",
    "write_trace_csv",
]
