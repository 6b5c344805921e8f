"""Procedural test shapes: spheres, boxes, tori, tubes, brackets.

Used by the test suite and handy for demos; every generator returns a
watertight TriangleMesh except make_two_ball_union, which is deliberately
a triangle soup.
"""

from __future__ import annotations

import numpy as np

from .mesh import TriangleMesh


def make_box(lo=(0.0, 0.0, 0.0), hi=(1.0, 1.0, 1.0)) -> TriangleMesh:
    lo = np.asarray(lo, dtype=np.float64)
    hi = np.asarray(hi, dtype=np.float64)
    corners = np.array(
        [[x, y, z] for x in (lo[0], hi[0]) for y in (lo[1], hi[1]) for z in (lo[2], hi[2])]
    )
    # 12 triangles, outward-facing
    quads = [
        (0, 1, 3, 2),  # x = lo
        (4, 6, 7, 5),  # x = hi
        (0, 4, 5, 1),  # y = lo
        (2, 3, 7, 6),  # y = hi
        (0, 2, 6, 4),  # z = lo
        (1, 5, 7, 3),  # z = hi
    ]
    tris = []
    for a, b, c, d in quads:
        tris.append((a, b, c))
        tris.append((a, c, d))
    return TriangleMesh(corners, np.array(tris))


def make_icosphere(subdivisions: int = 3, radius: float = 1.0, center=(0, 0, 0)) -> TriangleMesh:
    """Icosphere; 20 * 4^subdivisions faces (3 -> 1280)."""
    phi = (1.0 + np.sqrt(5.0)) / 2.0
    verts = np.array(
        [
            (-1, phi, 0), (1, phi, 0), (-1, -phi, 0), (1, -phi, 0),
            (0, -1, phi), (0, 1, phi), (0, -1, -phi), (0, 1, -phi),
            (phi, 0, -1), (phi, 0, 1), (-phi, 0, -1), (-phi, 0, 1),
        ],
        dtype=np.float64,
    )
    verts /= np.linalg.norm(verts, axis=1)[:, None]
    faces = [
        (0, 11, 5), (0, 5, 1), (0, 1, 7), (0, 7, 10), (0, 10, 11),
        (1, 5, 9), (5, 11, 4), (11, 10, 2), (10, 7, 6), (7, 1, 8),
        (3, 9, 4), (3, 4, 2), (3, 2, 6), (3, 6, 8), (3, 8, 9),
        (4, 9, 5), (2, 4, 11), (6, 2, 10), (8, 6, 7), (9, 8, 1),
    ]
    verts = [tuple(v) for v in verts]
    for _ in range(subdivisions):
        cache: dict[tuple[int, int], int] = {}

        def midpoint(i, j):
            key = (min(i, j), max(i, j))
            if key not in cache:
                p = np.asarray(verts[i]) + np.asarray(verts[j])
                p /= np.linalg.norm(p)
                cache[key] = len(verts)
                verts.append(tuple(p))
            return cache[key]

        new_faces = []
        for a, b, c in faces:
            ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
            new_faces += [(a, ab, ca), (b, bc, ab), (c, ca, bc), (ab, bc, ca)]
        faces = new_faces
    v = np.asarray(verts) * radius + np.asarray(center, dtype=np.float64)
    return TriangleMesh(v, np.array(faces))


def make_ellipsoid(semi_axes=(1.0, 0.25, 0.25), subdivisions: int = 3) -> TriangleMesh:
    sphere = make_icosphere(subdivisions)
    return TriangleMesh(sphere.vertices * np.asarray(semi_axes), sphere.triangles)


def make_torus(major: float = 1.0, minor: float = 0.3, nu: int = 40, nv: int = 20) -> TriangleMesh:
    iu, iv = np.meshgrid(np.arange(nu), np.arange(nv), indexing="ij")
    u = 2 * np.pi * iu / nu
    v = 2 * np.pi * iv / nv
    x = (major + minor * np.cos(v)) * np.cos(u)
    y = (major + minor * np.cos(v)) * np.sin(u)
    z = minor * np.sin(v)
    verts = np.stack([x.ravel(), y.ravel(), z.ravel()], axis=1)
    tris = []
    for i in range(nu):
        for j in range(nv):
            a = i * nv + j
            b = ((i + 1) % nu) * nv + j
            c = ((i + 1) % nu) * nv + (j + 1) % nv
            d = i * nv + (j + 1) % nv
            tris.append((a, b, c))
            tris.append((a, c, d))
    return TriangleMesh(verts, np.array(tris))


def make_tube(length: float = 2.0, radius: float = 0.25, segments: int = 32) -> TriangleMesh:
    """Closed cylinder along +x with fan-capped ends."""
    theta = 2 * np.pi * np.arange(segments) / segments
    ring = np.stack([np.zeros(segments), np.cos(theta) * radius, np.sin(theta) * radius], axis=1)
    v0 = ring.copy()
    v1 = ring + np.array([length, 0.0, 0.0])
    verts = np.vstack([v0, v1, [[0, 0, 0]], [[length, 0, 0]]])
    c0, c1 = 2 * segments, 2 * segments + 1
    tris = []
    for i in range(segments):
        j = (i + 1) % segments
        tris.append((i, j, segments + j))
        tris.append((i, segments + j, segments + i))
        tris.append((c0, j, i))                          # cap at x=0, normal -x
        tris.append((c1, segments + i, segments + j))    # cap at x=length, normal +x
    return TriangleMesh(verts, np.array(tris))


def make_l_bracket(arm: float = 1.0, thickness: float = 0.35, depth: float = 0.35) -> TriangleMesh:
    """L-shaped prism: L cross-section in the xy plane extruded along z."""
    t = thickness
    poly = np.array(
        [(0, 0), (arm, 0), (arm, t), (t, t), (t, arm), (0, arm)], dtype=np.float64
    )
    # Fan triangulation of the L polygon from its reflex-safe corner (0, 0).
    tri2d = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5)]
    n = len(poly)
    bottom = np.column_stack([poly, np.zeros(n)])
    top = np.column_stack([poly, np.full(n, depth)])
    verts = np.vstack([bottom, top])
    tris = []
    for a, b, c in tri2d:
        tris.append((a, c, b))                  # bottom, normal -z
        tris.append((n + a, n + b, n + c))      # top, normal +z
    for i in range(n):
        j = (i + 1) % n
        tris.append((i, j, n + j))
        tris.append((i, n + j, n + i))
    return TriangleMesh(verts, np.array(tris))


def make_two_ball_union(
    c1=(-0.4, 0.0, 0.0), r1: float = 0.6, c2=(0.4, 0.0, 0.0), r2: float = 0.6,
    subdivisions: int = 2,
) -> TriangleMesh:
    """Triangle soup of two overlapping spheres (interior patches kept)."""
    a = make_icosphere(subdivisions, radius=r1, center=c1)
    b = make_icosphere(subdivisions, radius=r2, center=c2)
    verts = np.vstack([a.vertices, b.vertices])
    tris = np.vstack([a.triangles, b.triangles + len(a.vertices)])
    return TriangleMesh(verts, tris)
