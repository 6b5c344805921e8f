"""Exception hierarchy shared across the package."""


class CoveraxError(Exception):
    """Base class for all package errors."""


class ParseError(CoveraxError):
    """A shape file could not be parsed."""


class EmptyShape(CoveraxError):
    """The shape has no usable geometry (no triangles, degenerate bbox, ...)."""


class TooFewPoints(CoveraxError):
    """A point cloud needs at least 4 points."""


class MissingNormals(CoveraxError):
    """The point-cloud inside test requires oriented normals."""


class RejectionStarvation(CoveraxError):
    """Rejection sampling could not reach the requested count.

    Raised when the interior acceptance rate stays below 1e-4 or the trial
    cap is exhausted.  Treated as "infeasible input" (exit code 2) by the CLI.
    """


class EmptySet(CoveraxError):
    """A nearest-neighbor query against an empty target set."""


class NegativeDilation(CoveraxError):
    """delta_r must be nonnegative."""


class LengthMismatch(CoveraxError):
    """Two score vectors must have equal length."""


class EmptyCandidates(CoveraxError):
    """Selection needs at least one candidate."""


class DegenerateInput(CoveraxError):
    """Weighted points are coplanar beyond perturbation rescue."""


class NonpositiveFactor(CoveraxError):
    """Connection-radius factor must be > 0."""


class EmptySkeleton(CoveraxError):
    """Metric evaluation needs a skeleton with at least one vertex."""


class UsageError(CoveraxError):
    """Invalid CLI arguments (e.g. too few ablation values)."""
