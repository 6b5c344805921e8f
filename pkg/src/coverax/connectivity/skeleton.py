"""Medial skeleton structure, extraction from an RT, and .skel file I/O."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..errors import ParseError
from .rt import RTResult, WeightedPoint


@dataclass
class Skeleton:
    """Medial vertices (center + undilated radius), edges and triangles."""

    vertices: np.ndarray   # (nv, 4): x y z r
    edges: np.ndarray      # (ne, 2) sorted unique pairs
    triangles: np.ndarray  # (nt, 3) sorted unique triples

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, dtype=np.float64).reshape(-1, 4)
        self.edges = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        self.triangles = np.asarray(self.triangles, dtype=np.int64).reshape(-1, 3)

    @property
    def centers(self) -> np.ndarray:
        return self.vertices[:, :3]

    @property
    def radii(self) -> np.ndarray:
        return self.vertices[:, 3]

    def __len__(self) -> int:
        return len(self.vertices)


def extract_skeleton(
    rt: RTResult, points: list[WeightedPoint], selected_balls
) -> Skeleton:
    """Keep RT edges/triangles whose endpoints are all inner-tagged.

    Skeleton vertices are the selected balls (undilated radii); isolated
    inner vertices are retained.
    """
    inner_map = {}  # weighted-point index -> skeleton vertex index
    for i, wp in enumerate(points):
        if wp.tag == "inner":
            inner_map[i] = wp.source_index

    vertices = np.array(
        [list(np.asarray(c, dtype=np.float64)) + [float(r)] for (c, r, _rd) in selected_balls]
    )

    edges = set()
    triangles = set()
    for a, b in rt.edges():
        if a in inner_map and b in inner_map:
            edges.add(tuple(sorted((inner_map[a], inner_map[b]))))
    for a, b, c in rt.triangles():
        if a in inner_map and b in inner_map and c in inner_map:
            triangles.add(tuple(sorted((inner_map[a], inner_map[b], inner_map[c]))))
    # every triangle's edges must be present
    for tri in triangles:
        for i in range(3):
            for j in range(i + 1, 3):
                edges.add((tri[i], tri[j]))

    return Skeleton(
        vertices,
        np.array(sorted(edges), dtype=np.int64).reshape(-1, 2),
        np.array(sorted(triangles), dtype=np.int64).reshape(-1, 3),
    )


def save_skel(path, skeleton: Skeleton) -> None:
    """Text interchange: header, then `v x y z r`, `e i j`, `t i j k` lines."""
    with open(path, "w") as fh:
        fh.write(
            f"skel {len(skeleton.vertices)} {len(skeleton.edges)} {len(skeleton.triangles)}\n"
        )
        for x, y, z, r in skeleton.vertices:
            fh.write(f"v {x:.17g} {y:.17g} {z:.17g} {r:.17g}\n")
        for i, j in skeleton.edges:
            fh.write(f"e {i} {j}\n")
        for i, j, k in skeleton.triangles:
            fh.write(f"t {i} {j} {k}\n")


def load_skel(path) -> Skeleton:
    path = Path(path)
    if not path.exists():
        raise ParseError(f"no such file: {path}")
    verts, edges, tris = [], [], []
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 4 or header[0] != "skel":
            raise ParseError(f"{path}: bad .skel header")
        nv, ne, nt = (int(x) for x in header[1:])
        for lineno, raw in enumerate(fh, 2):
            parts = raw.split()
            if not parts:
                continue
            try:
                if parts[0] == "v":
                    verts.append([float(x) for x in parts[1:5]])
                elif parts[0] == "e":
                    edges.append([int(x) for x in parts[1:3]])
                elif parts[0] == "t":
                    tris.append([int(x) for x in parts[1:4]])
                else:
                    raise ParseError(f"{path}:{lineno}: unknown record {parts[0]!r}")
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from exc
    if len(verts) != nv or len(edges) != ne or len(tris) != nt:
        raise ParseError(f"{path}: header counts do not match body")
    return Skeleton(
        np.asarray(verts, dtype=np.float64).reshape(-1, 4),
        np.asarray(edges, dtype=np.int64).reshape(-1, 2),
        np.asarray(tris, dtype=np.int64).reshape(-1, 3),
    )
