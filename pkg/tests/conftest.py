"""Shared fixtures and helpers for the test suite."""

import numpy as np
import pytest

from coverax.selection import build_coverage_matrix, compute_radii, dilate_radii


def make_tiny_instance(rng, max_p=10, max_s=12, max_v=5):
    """Random small selection instance: points, matrix, target_v, omega."""
    n = int(rng.integers(2, max_p + 1))
    m = int(rng.integers(2, max_s + 1))
    target_v = int(rng.integers(1, max_v + 1))
    points = rng.random((n, 3))
    samples = rng.random((m, 3))
    radii = compute_radii(points, samples)
    # spread dilations so coverage patterns vary from sparse to dense
    delta = float(rng.uniform(0.0, 0.6))
    dilated = dilate_radii(radii, delta)
    matrix = build_coverage_matrix(points, dilated, samples)
    omega = float(rng.choice([0.0, 0.5, 1.0, 2.0]))
    return points, matrix, target_v, omega


def write_obj(path, mesh):
    """Minimal OBJ writer for feeding synthetic meshes to the CLI."""
    with open(path, "w") as fh:
        for v in mesh.vertices:
            fh.write(f"v {v[0]:.17g} {v[1]:.17g} {v[2]:.17g}\n")
        for t in mesh.triangles:
            fh.write(f"f {t[0] + 1} {t[1] + 1} {t[2] + 1}\n")


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
