from .envelope import (
    Envelope,
    MedialPrimitive,
    envelope_distance,
    sample_envelope,
)
from .report import (
    DEFAULT_ENVELOPE_SAMPLES,
    ErrorReport,
    coverage_rate,
    hausdorff_errors,
    write_metrics_json,
)

__all__ = [
    "DEFAULT_ENVELOPE_SAMPLES",
    "Envelope",
    "ErrorReport",
    "MedialPrimitive",
    "coverage_rate",
    "envelope_distance",
    "hausdorff_errors",
    "sample_envelope",
    "write_metrics_json",
]
