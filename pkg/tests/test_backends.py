"""The compiled selection kernel must agree with the numpy fallback."""

import numpy as np
import pytest

from conftest import make_tiny_instance
from coverax.selection import (
    SelectionConfig,
    available_backends,
    build_coverage_matrix,
    compute_radii,
    default_backend_name,
    dilate_radii,
    get_backend,
    select_skeletal_points,
)

HAVE_COMPILED = "compiled" in available_backends()

needs_compiled = pytest.mark.skipif(
    not HAVE_COMPILED, reason="compiled extension not built"
)


def test_numpy_backend_always_available():
    assert "numpy" in available_backends()
    assert get_backend("numpy").NAME == "numpy"
    assert default_backend_name() in ("numpy", "compiled")


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        get_backend("fortran")


@needs_compiled
def test_backends_agree_on_tiny_instances(rng):
    for _ in range(50):
        points, mat, target_v, omega = make_tiny_instance(rng)
        cfg = SelectionConfig(target_v=target_v, omega=omega)
        a = select_skeletal_points(points, mat, cfg, backend="numpy")
        b = select_skeletal_points(points, mat, cfg, backend="compiled")
        assert a.selected == b.selected
        np.testing.assert_array_equal(a.state.uncovered, b.state.uncovered)
        for ra, rb in zip(a.trace, b.trace):
            ta, tb = ra.astuple(), rb.astuple()
            assert ta[:2] == tb[:2]
            np.testing.assert_allclose(ta[2:], tb[2:], atol=1e-12)


@needs_compiled
def test_backends_agree_on_medium_instance(rng):
    points = rng.random((400, 3))
    samples = rng.random((300, 3))
    radii = dilate_radii(compute_radii(points, samples), 0.1)
    mat = build_coverage_matrix(points, radii, samples)
    cfg = SelectionConfig(target_v=40, omega=1.0)
    a = select_skeletal_points(points, mat, cfg, backend="numpy")
    b = select_skeletal_points(points, mat, cfg, backend="compiled")
    assert a.selected == b.selected
    assert a.backend == "numpy" and b.backend == "compiled"
