#!/usr/bin/env python3
"""Compare the compiled selection kernel against the pure-numpy fallback.

Builds a synthetic slab-shaped instance at a few sizes, runs the full
greedy selection through each available backend, checks the selections
agree exactly, and prints a timing table.

Usage: python benchmarks/backend_compare.py [--repeats 3]
"""

import argparse
import time

import numpy as np

from coverax.selection import (
    SelectionConfig,
    available_backends,
    build_coverage_matrix,
    compute_radii,
    dilate_radii,
    select_skeletal_points,
)


def make_instance(n_candidates, n_samples, seed=0):
    rng = np.random.default_rng(seed)
    # thin slab: surface on the two large faces, candidates inside
    samples = rng.random((n_samples, 3))
    samples[:, 2] = np.round(samples[:, 2]) * 0.1
    candidates = rng.random((n_candidates, 3))
    candidates[:, 2] *= 0.1
    radii = dilate_radii(compute_radii(candidates, samples), 0.02)
    matrix = build_coverage_matrix(candidates, radii, samples)
    return candidates, matrix


def bench(points, matrix, target_v, backend, repeats):
    times = []
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = select_skeletal_points(
            points, matrix, SelectionConfig(target_v=target_v), backend=backend
        )
        times.append(time.perf_counter() - t0)
    return result, min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    names = list(available_backends())
    print(f"available backends: {', '.join(names)}")
    print(f"{'|P|':>8} {'|S|':>6} {'|V|':>5}", end="")
    for name in names:
        print(f" {name + ' (s)':>14}", end="")
    print(" speedup" if len(names) > 1 else "")

    for n_candidates, n_samples, target_v in (
        (2_000, 1_000, 50),
        (10_000, 2_000, 100),
        (40_000, 4_000, 100),
    ):
        points, matrix = make_instance(n_candidates, n_samples)
        row = f"{n_candidates:>8} {n_samples:>6} {target_v:>5}"
        results, timings = {}, {}
        for name in names:
            results[name], timings[name] = bench(
                points, matrix, target_v, name, args.repeats
            )
            row += f" {timings[name]:>14.3f}"
        first = results[names[0]].selected
        for name in names[1:]:
            assert results[name].selected == first, (
                f"backend {name!r} disagrees with {names[0]!r}"
            )
        if len(names) > 1:
            row += f" {timings['numpy'] / timings['compiled']:>6.2f}x"
        print(row)

    if len(names) > 1:
        print("all backends produced identical selections")


if __name__ == "__main__":
    main()
