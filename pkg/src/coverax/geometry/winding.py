"""Generalized winding numbers for inside/outside classification.

Mesh path: exact per-triangle signed solid angle summation
(van Oosterom & Strackee).  Cloud path: oriented-dipole approximation,
which needs unit normals and per-point areas.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ..errors import MissingNormals
from ..parallel import worker_count
from .cloud import OrientedPointCloud
from .mesh import TriangleMesh

_BATCH = 256  # queries per chunk; keeps the (batch, ntri) temporaries small


def _mesh_winding_chunk(mesh: TriangleMesh, queries: np.ndarray) -> np.ndarray:
    a = mesh.vertices[mesh.triangles[:, 0]][None, :, :] - queries[:, None, :]
    b = mesh.vertices[mesh.triangles[:, 1]][None, :, :] - queries[:, None, :]
    c = mesh.vertices[mesh.triangles[:, 2]][None, :, :] - queries[:, None, :]
    la = np.linalg.norm(a, axis=2)
    lb = np.linalg.norm(b, axis=2)
    lc = np.linalg.norm(c, axis=2)
    det = np.einsum("qtk,qtk->qt", a, np.cross(b, c))
    denom = (
        la * lb * lc
        + np.einsum("qtk,qtk->qt", a, b) * lc
        + np.einsum("qtk,qtk->qt", b, c) * la
        + np.einsum("qtk,qtk->qt", c, a) * lb
    )
    omega = 2.0 * np.arctan2(det, denom)
    return omega.sum(axis=1) / (4.0 * np.pi)


def _cloud_winding_chunk(cloud: OrientedPointCloud, queries: np.ndarray) -> np.ndarray:
    d = cloud.points[None, :, :] - queries[:, None, :]
    r = np.linalg.norm(d, axis=2)
    r3 = np.maximum(r, 1e-300) ** 3
    dots = np.einsum("qpk,pk->qp", d, cloud.normals)
    return (cloud.areas[None, :] * dots / r3).sum(axis=1) / (4.0 * np.pi)


def winding_numbers(shape, queries: np.ndarray) -> np.ndarray:
    """Winding number of each query point with respect to the shape."""
    queries = np.asarray(queries, dtype=np.float64).reshape(-1, 3)
    if isinstance(shape, TriangleMesh):
        chunk = lambda q: _mesh_winding_chunk(shape, q)
    elif isinstance(shape, OrientedPointCloud):
        if shape.normals is None:
            raise MissingNormals("point-cloud winding numbers require normals")
        if shape.areas is None:
            shape = shape.with_estimated_areas()
        chunk = lambda q: _cloud_winding_chunk(shape, q)
    else:
        raise TypeError(f"unsupported shape type: {type(shape)!r}")

    chunks = [queries[i : i + _BATCH] for i in range(0, len(queries), _BATCH)]
    if not chunks:
        return np.empty(0)
    workers = worker_count()
    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(chunk, chunks))
    else:
        parts = [chunk(c) for c in chunks]
    return np.concatenate(parts)


def winding_number(shape, q) -> float:
    """Winding number at a single query point."""
    return float(winding_numbers(shape, np.asarray(q).reshape(1, 3))[0])
