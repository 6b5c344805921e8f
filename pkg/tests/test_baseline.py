"""Greedy set-cover baseline vs exhaustive minimum cover and the selection loop."""

import numpy as np

from conftest import make_tiny_instance
from coverax.selection import SelectionConfig, greedy_scp_baseline, select_skeletal_points
from reference_impl import ref_greedy_cover, ref_minimum_cover_size
from test_selection import matrix_from_dense


def test_single_covering_candidate():
    dense = np.zeros((4, 3), dtype=bool)
    dense[:, 2] = True
    dense[0, 0] = True
    _, mat = matrix_from_dense(dense)
    res = greedy_scp_baseline(mat)
    assert res.selected == [2]
    assert res.feasible


def test_uncoverable_sample_reported_not_fatal():
    dense = np.zeros((3, 2), dtype=bool)
    dense[0, 0] = True
    dense[1, 1] = True
    # sample 2 covered by nobody
    _, mat = matrix_from_dense(dense)
    res = greedy_scp_baseline(mat)
    assert not res.feasible
    assert res.uncovered == [2]
    assert sorted(res.selected) == [0, 1]


def test_greedy_vs_exhaustive_optimum(rng):
    for _ in range(30):
        points, mat, _, _ = make_tiny_instance(rng)
        dense = mat.dense().tolist()
        res = greedy_scp_baseline(mat)
        opt = ref_minimum_cover_size(dense)
        m = mat.m
        assert opt <= len(res.selected) <= max(opt, 1) * (1 + np.log(max(m, 2)))
        ref_sel, ref_left = ref_greedy_cover(dense)
        assert res.selected == ref_sel
        assert res.uncovered == ref_left


def test_omega_zero_first_pick_matches_baseline(rng):
    for _ in range(25):
        points, mat, target_v, _ = make_tiny_instance(rng)
        sel = select_skeletal_points(points, mat, SelectionConfig(target_v=target_v, omega=0.0))
        base = greedy_scp_baseline(mat)
        if base.selected:
            assert sel.selected[0] == base.selected[0]


def test_max_points_cap(rng):
    points, mat, _, _ = make_tiny_instance(rng)
    res = greedy_scp_baseline(mat, max_points=1)
    assert len(res.selected) <= 1
