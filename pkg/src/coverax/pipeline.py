"""End-to-end pipeline: ingest -> sample -> candidates -> select -> connect
-> measure, plus the ablation and scaling helpers behind the CLI."""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .connectivity import (
    extract_skeleton,
    inner_weighted_points,
    regular_triangulation,
    save_skel,
    surface_weighted_points,
)
from .errors import ParseError, UsageError
from .geometry import (
    OrientedPointCloud,
    TriangleMesh,
    generate_candidates,
    load_mesh,
    load_point_cloud,
    normalize_shape,
    sample_cloud,
    sample_surface,
    save_xyz,
)
from .geometry.candidates import CandidateSet
from .metrics import coverage_rate, hausdorff_errors, write_metrics_json
from .selection import (
    SelectionConfig,
    build_coverage_matrix,
    compute_radii,
    dilate_radii,
    greedy_scp_baseline,
    select_skeletal_points,
    write_trace_csv,
)

DENSE_SURFACE_SAMPLES = 100_000

# fixed sub-seed offsets so each randomized stage gets its own stream
_SEED_SAMPLES = 0
_SEED_CANDIDATES = 1
_SEED_DENSE = 2
_SEED_ENVELOPE = 3


@dataclass
class RunConfig:
    input_path: str
    target_v: int
    input_format: str | None = None  # obj | off | ply | xyz (None: by suffix)
    samples: int = 1500
    candidates: int = 10000
    delta_r: float = 0.02
    dilation_mode: str = "offset"
    omega: float = 1.0
    seed: int = 0
    baseline: bool = False
    out_dir: str = "out"
    candidates_file: str | None = None
    argmin: bool = False
    m_env: int = 100_000
    dense_surface: int = DENSE_SURFACE_SAMPLES
    rt_factor: float = 1.0
    backend: str = "auto"

    def __post_init__(self):
        for name in ("samples", "candidates", "target_v", "m_env"):
            if getattr(self, name) < 1:
                raise UsageError(f"{name} must be >= 1")


@dataclass
class PipelineResult:
    skeleton: object
    selection: object
    samples: object
    candidate_set: CandidateSet
    report: object
    timings_ms: dict
    metrics_payload: dict
    baseline: dict | None = None
    transform: object = None
    shape: object = field(default=None, repr=False)


def _load_shape(config: RunConfig):
    path = Path(config.input_path)
    fmt = (config.input_format or path.suffix.lstrip(".")).lower()
    if fmt in ("obj", "off"):
        return load_mesh(path, fmt)
    if fmt == "xyz":
        return load_point_cloud(path, fmt)
    if fmt == "ply":
        try:
            return load_mesh(path, fmt)
        except Exception:
            return load_point_cloud(path, fmt)
    raise ParseError(f"unsupported input format: {fmt!r}")


def run_pipeline(config: RunConfig, shape=None, write_artifacts: bool = True) -> PipelineResult:
    """Full pipeline run.  A pre-loaded shape may be passed to skip I/O."""
    timings: dict[str, float] = {}
    t_all = time.perf_counter()

    t0 = time.perf_counter()
    if shape is None:
        shape = _load_shape(config)
    shape, transform = normalize_shape(shape)
    timings["load_ms"] = (time.perf_counter() - t0) * 1e3

    t0 = time.perf_counter()
    if isinstance(shape, TriangleMesh):
        samples = sample_surface(shape, config.samples, config.seed + _SEED_SAMPLES)
    else:
        samples = sample_cloud(shape, config.samples, config.seed + _SEED_SAMPLES)
    timings["sample_ms"] = (time.perf_counter() - t0) * 1e3

    t0 = time.perf_counter()
    if config.candidates_file:
        raw = load_point_cloud(config.candidates_file, "xyz")
        cand = CandidateSet(transform.apply(raw.points))
    else:
        cand = generate_candidates(shape, config.candidates, config.seed + _SEED_CANDIDATES)
    radii = compute_radii(cand.points, samples.points)
    dilated = dilate_radii(radii, config.delta_r, config.dilation_mode)
    cand = CandidateSet(cand.points, radii, dilated, config.dilation_mode, config.delta_r)
    matrix = build_coverage_matrix(cand.points, dilated, samples.points)
    timings["candidates_ms"] = (time.perf_counter() - t0) * 1e3

    t0 = time.perf_counter()
    sel_config = SelectionConfig(
        target_v=config.target_v,
        omega=config.omega,
        delta_r=config.delta_r,
        dilation_mode=config.dilation_mode,
        argmin=config.argmin,
    )
    selection = select_skeletal_points(cand.points, matrix, sel_config, backend=config.backend)
    timings["selection_ms"] = (time.perf_counter() - t0) * 1e3

    t0 = time.perf_counter()
    selected = selection.selected
    balls = [(cand.points[i], float(radii[i]), float(dilated[i])) for i in selected]
    weighted = inner_weighted_points(balls, config.rt_factor) + surface_weighted_points(
        samples.points, config.delta_r, offset=len(balls)
    )
    rt = regular_triangulation(weighted, seed=config.seed)
    skeleton = extract_skeleton(rt, weighted, balls)
    timings["connectivity_ms"] = (time.perf_counter() - t0) * 1e3

    t0 = time.perf_counter()
    if isinstance(shape, TriangleMesh):
        dense = sample_surface(shape, config.dense_surface, config.seed + _SEED_DENSE).points
    else:
        dense = shape.points
    lo, hi = shape.bbox
    norm_diag = float(np.linalg.norm(hi - lo))
    cov = coverage_rate(samples.points, cand.points[selected], dilated[selected])
    report = hausdorff_errors(
        dense,
        skeleton,
        bbox_diagonal=norm_diag,
        m_env=config.m_env,
        seed=config.seed + _SEED_ENVELOPE,
        coverage_rate=cov,
    )
    timings["metrics_ms"] = (time.perf_counter() - t0) * 1e3

    baseline_payload = None
    if config.baseline:
        base = greedy_scp_baseline(matrix)
        baseline_payload = {
            "n_selected": len(base.selected),
            "coverage_rate": coverage_rate(
                samples.points, cand.points[base.selected], dilated[base.selected]
            ),
            "uncovered_samples": base.uncovered,
        }

    timings["total_ms"] = (time.perf_counter() - t_all) * 1e3

    payload = {
        "eps_s2r": report.eps_s2r,
        "eps_r2s": report.eps_r2s,
        "eps_two_sided": report.eps_two_sided,
        "coverage_rate": cov,
        "bbox_diagonal": transform.original_bbox_diagonal,
        "n_selected": len(selected),
        "runtime_ms": timings,
        "config": {
            "input": str(config.input_path),
            "samples": config.samples,
            "candidates": config.candidates,
            "target_v": config.target_v,
            "delta_r": config.delta_r,
            "dilation_mode": config.dilation_mode,
            "omega": config.omega,
            "seed": config.seed,
            "argmin": config.argmin,
            "backend": selection.backend,
        },
    }
    if baseline_payload is not None:
        payload["baseline"] = baseline_payload

    result = PipelineResult(
        skeleton=skeleton,
        selection=selection,
        samples=samples,
        candidate_set=cand,
        report=report,
        timings_ms=timings,
        metrics_payload=payload,
        baseline=baseline_payload,
        transform=transform,
        shape=shape,
    )
    if write_artifacts:
        out = Path(config.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        save_skel(out / "skeleton.skel", skeleton)
        save_xyz(out / "selected_points.xyz", cand.points[selected], radii[selected])
        write_trace_csv(out / "trace.csv", selection.trace)
        write_metrics_json(out / "metrics.json", payload)
    return result


def ablate_v(config: RunConfig, v_list: list[int], out_csv=None) -> list[dict]:
    """One run per target |V| with shared samples and candidates."""
    if len(v_list) < 2:
        raise UsageError("ablate-v needs at least 2 target values")
    shape = _load_shape(config)
    rows = []
    for v in sorted(v_list):
        cfg = RunConfig(**{**config.__dict__, "target_v": int(v)})
        res = run_pipeline(cfg, shape=shape, write_artifacts=False)
        rows.append(
            {
                "target_v": int(v),
                "eps_two_sided": res.report.eps_two_sided,
                "coverage_rate": res.report.coverage_rate,
                "runtime_ms": res.timings_ms["total_ms"],
            }
        )
    if out_csv:
        _write_rows(out_csv, rows)
    return rows


def ablate_dilation(config: RunConfig, delta_list: list[float], out_csv=None) -> list[dict]:
    """One run per dilation delta_r; reports early-termination counts."""
    if len(delta_list) < 2:
        raise UsageError("ablate-dilation needs at least 2 delta values")
    shape = _load_shape(config)
    rows = []
    for d in delta_list:
        cfg = RunConfig(**{**config.__dict__, "delta_r": float(d)})
        res = run_pipeline(cfg, shape=shape, write_artifacts=False)
        rows.append(
            {
                "delta_r": float(d),
                "n_selected": len(res.selection.selected),
                "eps_two_sided": res.report.eps_two_sided,
                "terminated_early": len(res.selection.selected) < config.target_v,
            }
        )
    if out_csv:
        _write_rows(out_csv, rows)
    return rows


def time_selection(points, matrix, sel_config: SelectionConfig, repeats: int = 3,
                   backend: str = "auto") -> float:
    """Median wall time (ms) of the selection stage alone."""
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        select_skeletal_points(points, matrix, sel_config, backend=backend)
        times.append((time.perf_counter() - t0) * 1e3)
    return float(np.median(times))


def scaling_bench(
    axis: str,
    sizes: list[int],
    base_samples: int = 2000,
    base_candidates: int = 10000,
    base_target_v: int = 100,
    omega: float = 1.0,
    delta_r: float = 0.02,
    seed: int = 0,
    repeats: int = 3,
    backend: str = "auto",
    out_csv=None,
) -> list[dict]:
    """Selection-stage wall time vs one of |P|, |S|, |V| on a synthetic
    random instance (matrix construction and I/O excluded)."""
    if axis not in ("P", "S", "V"):
        raise UsageError("axis must be one of P, S, V")
    if len(sizes) < 3:
        raise UsageError("bench needs at least 3 sizes")
    rng = np.random.default_rng(seed)
    max_p = max(sizes) if axis == "P" else base_candidates
    max_s = max(sizes) if axis == "S" else base_samples
    all_points = rng.random((max_p, 3))
    all_samples = rng.random((max_s, 3)) * np.array([1.0, 1.0, 0.05])  # thin slab surface
    rows = []
    for size in sorted(sizes):
        n_p = size if axis == "P" else base_candidates
        n_s = size if axis == "S" else base_samples
        n_v = size if axis == "V" else base_target_v
        pts = all_points[:n_p]
        smp = all_samples[:n_s]
        radii = compute_radii(pts, smp)
        matrix = build_coverage_matrix(pts, dilate_radii(radii, delta_r), smp)
        cfg = SelectionConfig(target_v=n_v, omega=omega, delta_r=delta_r)
        ms = time_selection(pts, matrix, cfg, repeats=repeats, backend=backend)
        rows.append({"size": int(size), "wall_ms": ms})
    if out_csv:
        _write_rows(out_csv, rows)
    return rows


def _write_rows(path, rows: list[dict]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
