from .candidates import CandidateSet, generate_candidates
from .cloud import OrientedPointCloud
from .io import load_mesh, load_point_cloud, save_xyz
from .knn import PointIndex, nearest_distance
from .mesh import NormalizeTransform, TriangleMesh, normalize_shape
from .sampling import SurfaceSamples, sample_cloud, sample_surface
from .winding import winding_number, winding_numbers

__all__ = [
    "CandidateSet",
    "NormalizeTransform",
    "OrientedPointCloud",
    "PointIndex",
    "SurfaceSamples",
    "TriangleMesh",
    "generate_candidates",
    "load_mesh",
    "load_point_cloud",
    "nearest_distance",
    "normalize_shape",
    "sample_cloud",
    "sample_surface",
    "save_xyz",
    "winding_number",
    "winding_numbers",
]
