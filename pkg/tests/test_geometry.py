"""Normalization, surface sampling, winding numbers, candidates, kNN."""

import numpy as np
import pytest
from scipy import stats

from coverax.errors import EmptySet, EmptyShape, MissingNormals, RejectionStarvation
from coverax.geometry import (
    OrientedPointCloud,
    TriangleMesh,
    generate_candidates,
    nearest_distance,
    normalize_shape,
    sample_surface,
    winding_number,
    winding_numbers,
)
from coverax.geometry.knn import PointIndex
from coverax.geometry.shapes import make_box, make_icosphere


def two_triangle_square():
    verts = np.array([[0, 0, 0], [1, 0, 0], [1, 1, 0], [0, 1, 0]], dtype=float)
    return TriangleMesh(verts, np.array([[0, 1, 2], [0, 2, 3]]))


# ---------------------------------------------------------------- normalize


def test_normalize_centers_bbox():
    mesh = make_box(lo=(-2, -2, -2), hi=(2, 2, 2))
    norm, tr = normalize_shape(mesh)
    lo, hi = norm.bbox
    np.testing.assert_allclose(lo, 0.0, atol=1e-12)
    np.testing.assert_allclose(hi, 1.0, atol=1e-12)
    assert tr.scale == pytest.approx(0.25)
    # inverse maps back
    np.testing.assert_allclose(tr.invert(norm.vertices), mesh.vertices, atol=1e-12)


def test_normalize_longest_axis_spans_unit():
    mesh = make_box(lo=(0, 0, 0), hi=(4, 2, 1))
    norm, _ = normalize_shape(mesh)
    lo, hi = norm.bbox
    assert hi[0] - lo[0] == pytest.approx(1.0)
    assert hi[1] - lo[1] == pytest.approx(0.5)
    assert hi[2] - lo[2] == pytest.approx(0.25)


def test_normalize_identity_when_already_unit():
    mesh = make_box()
    _, tr = normalize_shape(mesh)
    assert tr.scale == pytest.approx(1.0)
    np.testing.assert_allclose(tr.offset, 0.0, atol=1e-12)


def test_normalize_degenerate_bbox():
    cloud = OrientedPointCloud(np.zeros((4, 3)))
    with pytest.raises(EmptyShape):
        normalize_shape(cloud)


# ----------------------------------------------------------------- sampling


def test_sampling_counts_binomial():
    mesh = two_triangle_square()
    m = 100_000
    s = sample_surface(mesh, m, seed=7)
    assert len(s.points) == m
    counts = np.bincount(s.triangle_ids, minlength=2)
    # 3 sigma around binomial(m, 1/2)
    sigma = np.sqrt(m * 0.25)
    assert abs(counts[0] - m / 2) < 3 * sigma
    chi2 = ((counts - m / 2) ** 2 / (m / 2)).sum()
    assert chi2 < stats.chi2.ppf(0.99, df=1)


def test_samples_lie_on_triangles():
    mesh = two_triangle_square()
    s = sample_surface(mesh, 5000, seed=3)
    assert np.abs(s.points[:, 2]).max() < 1e-12
    assert s.points[:, :2].min() >= 0 and s.points[:, :2].max() <= 1


def test_sampling_deterministic():
    mesh = make_icosphere(1)
    a = sample_surface(mesh, 1000, seed=42)
    b = sample_surface(mesh, 1000, seed=42)
    np.testing.assert_array_equal(a.points, b.points)
    c = sample_surface(mesh, 1000, seed=43)
    assert not np.array_equal(a.points, c.points)


def test_sampling_single_point():
    s = sample_surface(two_triangle_square(), 1, seed=0)
    assert s.points.shape == (1, 3)


# ------------------------------------------------------------------ winding


def test_winding_inside_outside_cube():
    mesh = make_box()
    assert winding_number(mesh, (0.5, 0.5, 0.5)) == pytest.approx(1.0, abs=1e-9)
    assert winding_number(mesh, (10, 10, 10)) == pytest.approx(0.0, abs=1e-9)


def test_winding_integer_valued_at_random_interior_and_exterior():
    mesh = make_icosphere(2)
    rng = np.random.default_rng(0)
    q = rng.uniform(-2, 2, size=(200, 3))
    w = winding_numbers(mesh, q)
    r = np.linalg.norm(q, axis=1)
    inside = r < 0.95
    outside = r > 1.05
    np.testing.assert_allclose(w[inside], 1.0, atol=1e-6)
    np.testing.assert_allclose(w[outside], 0.0, atol=1e-6)


def test_winding_open_cube_five_sixths():
    mesh = make_box()
    # drop the two triangles of the z=1 face
    keep = [t for t in mesh.triangles if not all(mesh.vertices[v][2] == 1.0 for v in t)]
    open_mesh = TriangleMesh(mesh.vertices, np.array(keep))
    assert len(open_mesh.triangles) == 10
    w = winding_number(open_mesh, (0.5, 0.5, 0.5))
    assert w == pytest.approx(5.0 / 6.0, abs=1e-9)


def test_winding_cloud_requires_normals():
    cloud = OrientedPointCloud(np.random.default_rng(0).random((10, 3)))
    with pytest.raises(MissingNormals):
        winding_number(cloud, (0.5, 0.5, 0.5))


def test_winding_oriented_cloud_sphere():
    mesh = make_icosphere(3)
    pts = mesh.vertices
    normals = pts / np.linalg.norm(pts, axis=1)[:, None]
    cloud = OrientedPointCloud(pts, normals).with_estimated_areas()
    # the dipole sum with heuristic areas is approximate; it only needs to
    # classify inside vs outside around the 0.5 threshold
    assert winding_number(cloud, (0, 0, 0)) > 0.5
    assert winding_number(cloud, (3, 0, 0)) < 0.5


# --------------------------------------------------------------- candidates


def test_candidates_all_interior():
    mesh = make_box()
    cand = generate_candidates(mesh, 100, seed=0)
    assert len(cand.points) == 100
    w = winding_numbers(mesh, cand.points)
    assert (w > 0.5).all()


def test_candidates_deterministic():
    mesh = make_icosphere(1)
    a = generate_candidates(mesh, 50, seed=9)
    b = generate_candidates(mesh, 50, seed=9)
    np.testing.assert_array_equal(a.points, b.points)


def test_candidates_starvation_on_thin_shell():
    # two nested spheres with opposite orientations: interior is a thin shell
    outer = make_icosphere(1, radius=1.0)
    inner = make_icosphere(1, radius=0.9999)
    flipped = inner.triangles[:, ::-1]
    verts = np.vstack([outer.vertices, inner.vertices])
    tris = np.vstack([outer.triangles, flipped + len(outer.vertices)])
    shell = TriangleMesh(verts, tris)
    with pytest.raises(RejectionStarvation):
        generate_candidates(shell, 100, seed=0, max_trials=150_000)


# ---------------------------------------------------------------------- kNN


def test_nearest_distance_trivial():
    assert nearest_distance((0, 0, 0), np.array([[1, 0, 0], [0, 2, 0]])) == (1.0, 0)


def test_nearest_distance_exact_hit():
    pts = np.array([[1, 0, 0], [0.25, 0.5, 0], [0, 2, 0]], dtype=float)
    assert nearest_distance((0.25, 0.5, 0), pts) == (0.0, 1)


def test_nearest_distance_tie_breaks_lowest_index():
    pts = np.array([[1, 0, 0], [-1, 0, 0], [0, 1, 0]], dtype=float)
    d, i = nearest_distance((0, 0, 0), pts)
    assert (d, i) == (1.0, 0)


def test_nearest_matches_brute_force(rng):
    target = rng.random((500, 3))
    queries = rng.random((10_000, 3))
    index = PointIndex(target)
    d, i = index.nearest(queries)
    diff = queries[:, None, :] - target[None, :, :]
    dists = np.linalg.norm(diff, axis=2)
    brute_i = dists.argmin(axis=1)
    brute_d = dists[np.arange(len(queries)), brute_i]
    np.testing.assert_array_equal(i, brute_i)
    np.testing.assert_allclose(d, brute_d, rtol=0, atol=1e-12)


def test_nearest_empty_target():
    with pytest.raises(EmptySet):
        nearest_distance((0, 0, 0), np.empty((0, 3)))
