from .rt import (
    RTResult,
    WeightedPoint,
    adjust_connection_radii,
    inner_weighted_points,
    regular_triangulation,
    surface_weighted_points,
)
from .skeleton import Skeleton, extract_skeleton, load_skel, save_skel

__all__ = [
    "RTResult",
    "Skeleton",
    "WeightedPoint",
    "adjust_connection_radii",
    "extract_skeleton",
    "inner_weighted_points",
    "load_skel",
    "regular_triangulation",
    "save_skel",
    "surface_weighted_points",
]
