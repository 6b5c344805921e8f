# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loop for greedy coverage+uniformity selection.

Mirrors coverax.selection._numpy_backend.run_selection; the test suite
checks both backends against the same independent reference.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()

NAME = "compiled"

DEF ZERO_STD_TOL = 1e-12


cdef void _standardize(double[::1] v, double[::1] out, Py_ssize_t ln) noexcept:
    cdef Py_ssize_t i
    cdef double mean = 0.0, var = 0.0, std, d
    if ln == 1:
        out[0] = 0.0
        return
    for i in range(ln):
        mean += v[i]
    mean /= ln
    for i in range(ln):
        d = v[i] - mean
        var += d * d
    std = sqrt(var / (ln - 1))
    if std < ZERO_STD_TOL:
        for i in range(ln):
            out[i] = 0.0
    else:
        for i in range(ln):
            out[i] = (v[i] - mean) / std


def run_selection(indptr, indices, m, points, target_v, omega, argmin=False):
    """Same contract as the numpy backend; see there for details."""
    cdef cnp.int64_t[::1] iptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef cnp.int32_t[::1] idx = np.ascontiguousarray(indices, dtype=np.int32)
    cdef double[:, ::1] pts = np.ascontiguousarray(points, dtype=np.float64).reshape(-1, 3)
    cdef Py_ssize_t n = pts.shape[0]
    cdef Py_ssize_t mm = m
    cdef Py_ssize_t tv = target_v
    cdef double om = omega
    cdef bint use_argmin = bool(argmin)

    uncovered_np = np.ones(mm, dtype=np.uint8)
    remaining_np = np.ones(n, dtype=np.uint8)
    cdef cnp.uint8_t[::1] uncovered = uncovered_np
    cdef cnp.uint8_t[::1] remaining = remaining_np
    cdef double[::1] unif_min = np.zeros(n)
    rem_idx_np = np.empty(n, dtype=np.int64)
    cove_np = np.empty(n, dtype=np.float64)
    unif_np = np.empty(n, dtype=np.float64)
    scove_np = np.empty(n, dtype=np.float64)
    sunif_np = np.empty(n, dtype=np.float64)
    score_np = np.empty(n, dtype=np.float64)
    cdef cnp.int64_t[::1] rem_idx = rem_idx_np
    cdef double[::1] cove = cove_np
    cdef double[::1] unif = unif_np
    cdef double[::1] scove = scove_np
    cdef double[::1] sunif = sunif_np
    cdef double[::1] score = score_np

    cdef Py_ssize_t k = 1, n_unc = mm, n_sel = 0
    cdef Py_ssize_t i, j, p, ln, pick, chosen
    cdef double c, best, dx, dy, dz, d
    selected = []
    trace = []
    last = {}

    while n_unc > 0 and k <= tv and n_sel < n:
        ln = 0
        for i in range(n):
            if remaining[i]:
                c = 0.0
                for p in range(iptr[i], iptr[i + 1]):
                    c += uncovered[idx[p]]
                rem_idx[ln] = i
                cove[ln] = c
                unif[ln] = unif_min[i] if n_sel > 0 else 0.0
                ln += 1
        _standardize(cove, scove, ln)
        _standardize(unif, sunif, ln)
        for j in range(ln):
            score[j] = scove[j] + om * sunif[j]
        pick = 0
        best = score[0]
        for j in range(1, ln):
            if (score[j] < best) if use_argmin else (score[j] > best):
                best = score[j]
                pick = j
        chosen = rem_idx[pick]

        last = {
            "indices": rem_idx_np[:ln].copy(),
            "cove": cove_np[:ln].copy(),
            "unif": unif_np[:ln].copy(),
            "score": score_np[:ln].copy(),
        }
        selected.append(int(chosen))
        remaining[chosen] = 0
        for p in range(iptr[chosen], iptr[chosen + 1]):
            if uncovered[idx[p]]:
                uncovered[idx[p]] = 0
                n_unc -= 1
        for i in range(n):
            dx = pts[i, 0] - pts[chosen, 0]
            dy = pts[i, 1] - pts[chosen, 1]
            dz = pts[i, 2] - pts[chosen, 2]
            d = sqrt(dx * dx + dy * dy + dz * dz)
            if n_sel == 0 or d < unif_min[i]:
                unif_min[i] = d
        n_sel += 1
        trace.append(
            (
                int(k),
                int(chosen),
                float(cove[pick]),
                float(unif[pick]),
                float(scove[pick]),
                float(sunif[pick]),
                float(score[pick]),
                int(n_unc),
            )
        )
        k += 1

    return {
        "selected": np.asarray(selected, dtype=np.int64),
        "trace": trace,
        "uncovered": uncovered_np.astype(bool),
        "remaining": remaining_np.astype(bool),
        "k": int(k),
        "last_scores": last,
    }
