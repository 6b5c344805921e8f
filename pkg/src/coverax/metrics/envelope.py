"""Signed distance to (and sampling of) the medial envelope.

The envelope is the union surface of spheres (skeleton vertices), cones
(linearly interpolated ball pairs over edges) and slabs (ball triples over
triangles).  Distances are closed-form: interior stationary points of
f = ||q - c(param)|| - r(param) are solved exactly and clamped candidates
are evaluated with the true f, so the minimum is exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import EmptySkeleton, RejectionStarvation
from ..connectivity.skeleton import Skeleton

_COLLINEAR_TOL = 1e-12
_COINCIDENT_TOL = 1e-12


@dataclass
class MedialPrimitive:
    """sphere (1 ball), cone (2 balls) or slab (3 balls).

    Degenerate inputs are demoted at construction: a slab with collinear
    centers becomes a cone, a cone with coincident centers a sphere.
    """

    kind: str
    spheres: list[tuple[np.ndarray, float]]

    @classmethod
    def make(cls, balls) -> "MedialPrimitive":
        balls = [(np.asarray(c, dtype=np.float64).reshape(3), float(r)) for c, r in balls]
        if any(r < 0 for _, r in balls):
            raise ValueError("negative radius")
        if len(balls) == 3:
            d1 = balls[1][0] - balls[0][0]
            d2 = balls[2][0] - balls[0][0]
            if np.linalg.norm(np.cross(d1, d2)) <= _COLLINEAR_TOL:
                balls = balls[:2]  # demote to cone
        if len(balls) == 2:
            if np.linalg.norm(balls[1][0] - balls[0][0]) <= _COINCIDENT_TOL:
                balls = [max(balls, key=lambda b: b[1])]  # demote to sphere
        kind = {1: "sphere", 2: "cone", 3: "slab"}[len(balls)]
        return cls(kind=kind, spheres=balls)


def _sphere_distance(q: np.ndarray, c: np.ndarray, r: float) -> np.ndarray:
    return np.linalg.norm(q - c, axis=1) - r


def _cone_distance(q: np.ndarray, c1, r1, c2, r2) -> np.ndarray:
    """min over t in [0,1] of ||q - c(t)|| - r(t), exact."""
    d = c2 - c1
    L2 = float(d @ d)
    dr = r2 - r1
    a = q - c1
    ad = a @ d
    aa = np.einsum("ij,ij->i", a, a)

    cands = [np.zeros(len(q)), np.ones(len(q))]
    if L2 > 0:
        cands.append(np.clip(ad / L2, 0.0, 1.0))
        A = L2 * (L2 - dr * dr)
        B = -2.0 * ad * (L2 - dr * dr)
        C = ad * ad - dr * dr * aa
        if abs(A) > 1e-300:
            disc = B * B - 4.0 * A * C
            ok = disc >= 0
            sq = np.sqrt(np.where(ok, disc, 0.0))
            for sign in (1.0, -1.0):
                t = (-B + sign * sq) / (2.0 * A)
                cands.append(np.clip(np.where(ok, t, 0.0), 0.0, 1.0))
        else:
            with np.errstate(divide="ignore", invalid="ignore"):
                t = np.where(np.abs(B) > 0, -C / np.where(B == 0, 1.0, B), 0.0)
            cands.append(np.clip(t, 0.0, 1.0))

    best = np.full(len(q), np.inf)
    for t in cands:
        g = np.sqrt(np.maximum(aa - 2.0 * t * ad + t * t * L2, 0.0))
        best = np.minimum(best, g - (r1 + t * dr))
    return best


def _slab_interior_distance(q: np.ndarray, balls) -> np.ndarray:
    """min of f over the open slab patch; +inf where the minimizer leaves it
    (edges and vertices are covered by the skeleton's cones and spheres)."""
    (c1, r1), (c2, r2), (c3, r3) = balls
    D = np.stack([c2 - c1, c3 - c1], axis=1)  # (3, 2)
    rho = np.array([r2 - r1, r3 - r1])
    G = D.T @ D
    Ginv = np.linalg.inv(G)
    Drho = D @ (Ginv @ rho)
    k2 = float(Drho @ Drho)
    if k2 >= 1.0:  # steeper than the balls allow: no tangent plane
        return np.full(len(q), np.inf)

    x = q - c1                       # (N, 3)
    Dtx = x @ D                      # (N, 2)
    s_proj = Dtx @ Ginv.T            # projection onto the center plane
    resid = x - s_proj @ D.T
    g = np.linalg.norm(resid, axis=1) / np.sqrt(1.0 - k2)
    s_stat = (Dtx + np.outer(g, rho)) @ Ginv.T

    best = np.full(len(q), np.inf)
    tol = 1e-12
    for s in (s_stat, s_proj):
        u, v = s[:, 0], s[:, 1]
        feasible = (u >= -tol) & (v >= -tol) & (u + v <= 1.0 + tol)
        c = c1 + s @ D.T
        r = r1 + s @ rho
        f = np.linalg.norm(q - c, axis=1) - r
        best = np.minimum(best, np.where(feasible, f, np.inf))
    return best


class Envelope:
    """Evaluates distances to the union envelope of a skeleton."""

    def __init__(self, skeleton: Skeleton):
        if len(skeleton) == 0:
            raise EmptySkeleton("skeleton has no vertices")
        self.skeleton = skeleton
        prims: list[MedialPrimitive] = []
        for x, y, z, r in skeleton.vertices:
            prims.append(MedialPrimitive(kind="sphere", spheres=[(np.array([x, y, z]), float(r))]))
        for i, j in skeleton.edges:
            p = MedialPrimitive.make(
                [(skeleton.centers[i], skeleton.radii[i]), (skeleton.centers[j], skeleton.radii[j])]
            )
            if p.kind == "cone":
                prims.append(p)
        for i, j, k in skeleton.triangles:
            p = MedialPrimitive.make(
                [(skeleton.centers[v], skeleton.radii[v]) for v in (i, j, k)]
            )
            if p.kind == "slab":
                prims.append(p)
        self.primitives = prims

    def primitive_distance(self, prim: MedialPrimitive, q: np.ndarray) -> np.ndarray:
        q = np.asarray(q, dtype=np.float64).reshape(-1, 3)
        if prim.kind == "sphere":
            (c, r), = prim.spheres
            return _sphere_distance(q, c, r)
        if prim.kind == "cone":
            (c1, r1), (c2, r2) = prim.spheres
            return _cone_distance(q, c1, r1, c2, r2)
        return _slab_interior_distance(q, prim.spheres)

    def distance(self, q: np.ndarray, exclude: int | None = None) -> np.ndarray:
        """Signed distance to the union envelope (min over primitives)."""
        q = np.asarray(q, dtype=np.float64).reshape(-1, 3)
        best = np.full(len(q), np.inf)
        for pi, prim in enumerate(self.primitives):
            if pi == exclude:
                continue
            best = np.minimum(best, self.primitive_distance(prim, q))
        return best


def envelope_distance(q, skeleton: Skeleton) -> float:
    """Signed distance from one point to the skeleton's medial envelope."""
    return float(Envelope(skeleton).distance(np.asarray(q).reshape(1, 3))[0])


def _primitive_area(prim: MedialPrimitive) -> float:
    if prim.kind == "sphere":
        (_, r), = prim.spheres
        return 4.0 * np.pi * r * r
    if prim.kind == "cone":
        (c1, r1), (c2, r2) = prim.spheres
        L = float(np.linalg.norm(c2 - c1))
        dr = r2 - r1
        if L <= abs(dr):  # one ball swallows the other: no lateral surface
            return 0.0
        cos_a = np.sqrt(1.0 - (dr / L) ** 2)
        rho0, rho1 = r1 * cos_a, r2 * cos_a
        return float(np.pi * (rho0 + rho1) * L * cos_a)
    # slab: two congruent tangent triangles
    (c1, r1), (c2, r2), (c3, r3) = prim.spheres
    D = np.stack([c2 - c1, c3 - c1], axis=1)
    rho = np.array([r2 - r1, r3 - r1])
    G = D.T @ D
    Drho = D @ np.linalg.solve(G, rho)
    k2 = float(Drho @ Drho)
    if k2 >= 1.0:
        return 0.0
    n = np.cross(D[:, 0], D[:, 1])
    n /= np.linalg.norm(n)
    m = -Drho + np.sqrt(1.0 - k2) * n
    v1 = c1 + r1 * m
    v2 = c2 + r2 * m
    v3 = c3 + r3 * m
    return float(np.linalg.norm(np.cross(v2 - v1, v3 - v1)))  # 2 * triangle area


def _orthonormal_frame(d: np.ndarray):
    d = d / np.linalg.norm(d)
    helper = np.array([1.0, 0.0, 0.0]) if abs(d[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = np.cross(d, helper)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(d, e1)
    return d, e1, e2


def _sample_primitive(prim: MedialPrimitive, count: int, rng) -> np.ndarray:
    if prim.kind == "sphere":
        (c, r), = prim.spheres
        dirs = rng.normal(size=(count, 3))
        dirs /= np.linalg.norm(dirs, axis=1)[:, None]
        return c + r * dirs
    if prim.kind == "cone":
        (c1, r1), (c2, r2) = prim.spheres
        d = c2 - c1
        L = float(np.linalg.norm(d))
        dr = r2 - r1
        dhat, e1, e2 = _orthonormal_frame(d)
        cos_a = np.sqrt(1.0 - (dr / L) ** 2)
        sin_a = dr / L
        # t density proportional to the local circle radius r(t)
        w = rng.random(count)
        if abs(dr) < 1e-15:
            t = w
        else:
            target = w * (r1 + dr / 2.0)
            disc = np.maximum(r1 * r1 + 2.0 * dr * target, 0.0)
            t = (-r1 + np.sqrt(disc)) / dr
        t = np.clip(t, 0.0, 1.0)
        theta = 2.0 * np.pi * rng.random(count)
        r_t = r1 + t * dr
        centers = c1 + np.outer(t, d) - np.outer(r_t * sin_a, dhat)
        rim = np.outer(np.cos(theta), e1) + np.outer(np.sin(theta), e2)
        return centers + (r_t * cos_a)[:, None] * rim
    # slab: uniform barycentric on one of the two tangent triangles
    (c1, r1), (c2, r2), (c3, r3) = prim.spheres
    D = np.stack([c2 - c1, c3 - c1], axis=1)
    rho = np.array([r2 - r1, r3 - r1])
    G = D.T @ D
    Drho = D @ np.linalg.solve(G, rho)
    k2 = float(Drho @ Drho)
    n = np.cross(D[:, 0], D[:, 1])
    n /= np.linalg.norm(n)
    lam = np.sqrt(max(1.0 - k2, 0.0))
    side = np.where(rng.random(count) < 0.5, 1.0, -1.0)
    u = rng.random(count)
    v = rng.random(count)
    flip = u + v > 1.0
    u[flip] = 1.0 - u[flip]
    v[flip] = 1.0 - v[flip]
    s = np.stack([u, v], axis=1)
    c = c1 + s @ D.T
    r = r1 + s @ rho
    m = -Drho[None, :] + (side * lam)[:, None] * n[None, :]
    return c + r[:, None] * m


def sample_envelope(skeleton: Skeleton, m: int, seed: int = 0) -> np.ndarray:
    """m points on the union envelope via per-primitive area-weighted
    rejection sampling (points strictly inside another primitive rejected)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    env = Envelope(skeleton)
    areas = np.array([_primitive_area(p) for p in env.primitives])
    total = areas.sum()
    if total <= 0:
        raise RejectionStarvation("envelope has zero surface area")
    probs = areas / total
    rng = np.random.default_rng(seed)
    out: list[np.ndarray] = []
    got = 0
    attempts = 0
    while got < m:
        attempts += 1
        if attempts > 200:
            raise RejectionStarvation("envelope rejection sampling starved")
        batch = max(1024, 2 * (m - got))
        prim_ids = rng.choice(len(env.primitives), size=batch, p=probs)
        counts = np.bincount(prim_ids, minlength=len(env.primitives))
        for pi, cnt in enumerate(counts):
            if cnt == 0:
                continue
            pts = _sample_primitive(env.primitives[pi], int(cnt), rng)
            if len(env.primitives) > 1:
                other = env.distance(pts, exclude=pi)
                pts = pts[other >= -1e-9]
            if len(pts):
                out.append(pts)
                got += len(pts)
    all_pts = np.concatenate(out)
    if len(all_pts) == m:
        return all_pts
    # drop the surplus uniformly: a prefix would over-represent the
    # primitives that happen to come first in the concatenation order
    return all_pts[rng.permutation(len(all_pts))[:m]]
