"""coverax: skeletal point selection and medial skeleton extraction.

Selects a compact set of interior skeletal points for a 3D shape by a
greedy coverage + uniformity score, connects them through the regular
triangulation of the selected balls, and evaluates the reconstruction by
sampled two-sided Hausdorff error.

Determinism: all randomness uses numpy's default_rng (PCG64), seeded; a
fixed seed reproduces results bit-for-bit on any platform.
"""

from . import connectivity, geometry, metrics, selection
from .pipeline import RunConfig, ablate_dilation, ablate_v, run_pipeline, scaling_bench
from .selection.backend import default_backend_name

__version__ = "0.1.0"

__all__ = [
    "RunConfig",
    "ablate_dilation",
    "ablate_v",
    "connectivity",
    "default_backend_name",
    "geometry",
    "metrics",
    "run_pipeline",
    "scaling_bench",
    "selection",
]
