"""Medial-envelope distances, envelope sampling, and error reports."""

import json

import numpy as np
import pytest

from coverax.connectivity import Skeleton
from coverax.errors import EmptySkeleton, RejectionStarvation
from coverax.geometry import sample_surface
from coverax.geometry.shapes import make_icosphere
from coverax.metrics import (
    Envelope,
    MedialPrimitive,
    coverage_rate,
    envelope_distance,
    hausdorff_errors,
    sample_envelope,
    write_metrics_json,
)
from reference_impl import (
    oracle_cone_distance,
    oracle_slab_distance,
    oracle_sphere_distance,
)


def sphere_skeleton(c=(0, 0, 0), r=1.0):
    return Skeleton(
        np.array([[c[0], c[1], c[2], r]], dtype=float),
        np.empty((0, 2), dtype=int),
        np.empty((0, 3), dtype=int),
    )


def edge_skeleton(b1, b2):
    (c1, r1), (c2, r2) = b1, b2
    return Skeleton(
        np.array([[*c1, r1], [*c2, r2]], dtype=float),
        np.array([[0, 1]]),
        np.empty((0, 3), dtype=int),
    )


def triangle_skeleton(balls):
    verts = np.array([[*c, r] for c, r in balls], dtype=float)
    return Skeleton(
        verts, np.array([[0, 1], [0, 2], [1, 2]]), np.array([[0, 1, 2]])
    )


# ----------------------------------------------------------------- distance


def test_sphere_distance_trivial():
    assert envelope_distance((2, 0, 0), sphere_skeleton()) == pytest.approx(1.0)
    assert envelope_distance((0, 0, 0), sphere_skeleton()) == pytest.approx(-1.0)


def test_equal_radii_cone_is_cylinder():
    skel = edge_skeleton(((0, 0, 0), 1.0), ((2, 0, 0), 1.0))
    assert envelope_distance((1, 1, 0), skel) == pytest.approx(0.0, abs=1e-12)
    assert envelope_distance((1, 2, 0), skel) == pytest.approx(1.0)


def test_single_vertex_is_exact_sphere_sdf(rng):
    skel = sphere_skeleton((0.3, -0.2, 0.1), 0.7)
    q = rng.uniform(-2, 2, size=(200, 3))
    d = Envelope(skel).distance(q)
    expect = np.linalg.norm(q - [0.3, -0.2, 0.1], axis=1) - 0.7
    np.testing.assert_allclose(d, expect, atol=1e-12)


def test_primitive_demotions():
    p = MedialPrimitive.make([((0, 0, 0), 0.5), ((1, 0, 0), 0.2), ((2, 0, 0), 0.3)])
    assert p.kind == "cone"  # collinear centers
    p = MedialPrimitive.make([((0, 0, 0), 0.5), ((0, 0, 0), 0.2)])
    assert p.kind == "sphere"  # coincident centers; bigger ball wins
    assert p.spheres[0][1] == 0.5


def test_cone_matches_grid_oracle(rng):
    for _ in range(150):
        c1 = rng.uniform(-1, 1, 3)
        c2 = rng.uniform(-1, 1, 3)
        r1, r2 = rng.uniform(0.05, 0.8, 2)
        q = rng.uniform(-2, 2, 3)
        skel = edge_skeleton((c1, r1), (c2, r2))
        got = envelope_distance(q, skel)
        expect = oracle_cone_distance(q, c1, r1, c2, r2)
        assert got == pytest.approx(expect, abs=1e-6)


def test_slab_matches_grid_oracle(rng):
    count = 0
    while count < 100:
        balls = [(rng.uniform(-1, 1, 3), float(rng.uniform(0.05, 0.6))) for _ in range(3)]
        if MedialPrimitive.make(balls).kind != "slab":
            continue
        count += 1
        q = rng.uniform(-2, 2, 3)
        got = envelope_distance(q, triangle_skeleton(balls))
        expect = min(
            oracle_slab_distance(q, balls),
            oracle_cone_distance(q, balls[0][0], balls[0][1], balls[1][0], balls[1][1]),
            oracle_cone_distance(q, balls[0][0], balls[0][1], balls[2][0], balls[2][1]),
            oracle_cone_distance(q, balls[1][0], balls[1][1], balls[2][0], balls[2][1]),
            oracle_sphere_distance(q, balls[0][0], balls[0][1]),
        )
        assert got == pytest.approx(expect, abs=1e-6)


def test_distance_is_lipschitz(rng):
    balls = [(rng.uniform(-1, 1, 3), float(rng.uniform(0.1, 0.5))) for _ in range(3)]
    skel = triangle_skeleton(balls)
    env = Envelope(skel)
    q1 = rng.uniform(-2, 2, size=(2000, 3))
    q2 = q1 + rng.normal(scale=0.3, size=(2000, 3))
    d1 = env.distance(q1)
    d2 = env.distance(q2)
    step = np.linalg.norm(q1 - q2, axis=1)
    assert (np.abs(d1 - d2) <= step + 1e-9).all()


def test_empty_skeleton_rejected():
    empty = Skeleton(np.empty((0, 4)), np.empty((0, 2), int), np.empty((0, 3), int))
    with pytest.raises(EmptySkeleton):
        envelope_distance((0, 0, 0), empty)


# ----------------------------------------------------------------- sampling


def test_sample_single_sphere_exact():
    skel = sphere_skeleton((0.5, 0, 0), 0.8)
    pts = sample_envelope(skel, 1000, seed=1)
    assert pts.shape == (1000, 3)
    r = np.linalg.norm(pts - [0.5, 0, 0], axis=1)
    np.testing.assert_allclose(r, 0.8, atol=1e-9)


def test_sample_two_disjoint_spheres_binomial():
    skel = Skeleton(
        np.array([[0, 0, 0, 0.5], [5, 0, 0, 0.5]], dtype=float),
        np.empty((0, 2), int),
        np.empty((0, 3), int),
    )
    m = 20000
    pts = sample_envelope(skel, m, seed=3)
    near_first = np.linalg.norm(pts, axis=1) < 2.5
    sigma = np.sqrt(m * 0.25)
    assert abs(near_first.sum() - m / 2) < 3 * sigma


def test_sample_overlapping_spheres_stay_on_union():
    skel = Skeleton(
        np.array([[0, 0, 0, 1.0], [0.5, 0, 0, 1.0]], dtype=float),
        np.empty((0, 2), int),
        np.empty((0, 3), int),
    )
    pts = sample_envelope(skel, 5000, seed=0)
    env = Envelope(skel)
    assert env.distance(pts).min() >= -1e-6


def test_sample_envelope_deterministic():
    skel = triangle_skeleton([((0, 0, 0), 0.3), ((1, 0, 0), 0.3), ((0, 1, 0), 0.3)])
    a = sample_envelope(skel, 500, seed=9)
    b = sample_envelope(skel, 500, seed=9)
    np.testing.assert_array_equal(a, b)


def test_sample_zero_area_starves():
    skel = sphere_skeleton((0, 0, 0), 0.0)
    with pytest.raises(RejectionStarvation):
        sample_envelope(skel, 10, seed=0)


# ------------------------------------------------------------------ reports


def test_hausdorff_exact_ball_match():
    mesh = make_icosphere(3)
    dense = sample_surface(mesh, 50000, seed=0).points
    report = hausdorff_errors(dense, sphere_skeleton(), bbox_diagonal=2 * np.sqrt(3.0),
                              m_env=20000, seed=1)
    assert report.eps_s2r <= 2e-3
    # the reverse side is limited by the random surface sampling density
    # (max nearest-neighbor gap over 5e4 points), not by the envelope
    assert report.eps_r2s <= 1e-2
    assert report.eps_two_sided == max(report.eps_s2r, report.eps_r2s)


def test_hausdorff_half_ball_inside_sphere():
    mesh = make_icosphere(3)
    dense = sample_surface(mesh, 20000, seed=0).points
    report = hausdorff_errors(dense, sphere_skeleton(r=0.5), bbox_diagonal=2 * np.sqrt(3.0),
                              m_env=5000, seed=1)
    assert report.eps_s2r == pytest.approx(0.5 / (2 * np.sqrt(3.0)), abs=2e-3)
    assert report.eps_two_sided == max(report.eps_s2r, report.eps_r2s)


def test_eps_nonincreasing_for_nested_skeletons():
    mesh = make_icosphere(2)
    dense = sample_surface(mesh, 5000, seed=0).points
    small = sphere_skeleton(r=0.5)
    bigger = Skeleton(
        np.array([[0, 0, 0, 0.5], [0.25, 0, 0, 0.6]], dtype=float),
        np.empty((0, 2), int),
        np.empty((0, 3), int),
    )
    a = hausdorff_errors(dense, small, 2 * np.sqrt(3.0), m_env=2000, seed=1)
    b = hausdorff_errors(dense, bigger, 2 * np.sqrt(3.0), m_env=2000, seed=1)
    assert b.eps_s2r <= a.eps_s2r + 1e-12


def test_coverage_rate_trivial():
    samples = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0.0]])
    full = coverage_rate(samples, np.zeros((1, 3)), np.array([2.0]))
    assert full == 1.0
    assert coverage_rate(samples, np.empty((0, 3)), np.empty(0)) == 0.0
    half = coverage_rate(samples, np.zeros((1, 3)), np.array([0.5]))
    assert half == pytest.approx(1 / 3)


def test_coverage_rate_matches_selection_trace(rng):
    from coverax.selection import (
        SelectionConfig,
        build_coverage_matrix,
        compute_radii,
        dilate_radii,
        select_skeletal_points,
    )

    cands = rng.random((50, 3))
    samples = rng.random((40, 3))
    dilated = dilate_radii(compute_radii(cands, samples), 0.15)
    mat = build_coverage_matrix(cands, dilated, samples)
    res = select_skeletal_points(cands, mat, SelectionConfig(target_v=5))
    sel = res.selected
    rate = coverage_rate(samples, cands[sel], dilated[sel])
    assert rate == pytest.approx(res.coverage_rate)
    assert rate == pytest.approx(1.0 - res.trace[-1].uncovered_remaining / mat.m)


def test_metrics_json_stable_keys(tmp_path):
    p = tmp_path / "m.json"
    write_metrics_json(p, {"b": 1, "a": {"z": 1, "y": 2}})
    text = p.read_text()
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"b": 1, "a": {"z": 1, "y": 2}}
