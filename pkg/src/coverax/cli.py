"""Command-line interface: run, ablate-v, ablate-dilation, bench.

Exit codes: 0 success, 1 error, 2 infeasible input (e.g. rejection
sampling starved on a shape with no usable interior).
"""

from __future__ import annotations

import sys

import click

from . import pipeline
from .errors import CoveraxError, RejectionStarvation

_INFEASIBLE = (RejectionStarvation,)


def _shared_options(fn):
    opts = [
        click.option("--input", "input_path", required=True, help="Shape file."),
        click.option("--format", "input_format", default=None,
                     type=click.Choice(["obj", "off", "ply", "xyz"]), help="Input format (default: by suffix)."),
        click.option("--samples", default=1500, show_default=True, help="Surface sample count m."),
        click.option("--candidates", default=10000, show_default=True, help="Interior candidate count n."),
        click.option("--target-v", required=True, type=int, help="Target number of skeletal points |V|."),
        click.option("--delta-r", default=0.02, show_default=True, help="Ball dilation."),
        click.option("--dilation-mode", default="offset", show_default=True,
                     type=click.Choice(["offset", "scale"])),
        click.option("--omega", default=1.0, show_default=True, help="Uniformity weight."),
        click.option("--seed", default=0, show_default=True),
        click.option("--out", "out_dir", default="out", show_default=True, help="Output directory."),
        click.option("--baseline", is_flag=True, help="Also run the greedy set-cover baseline."),
        click.option("--candidates-file", default=None,
                     help="XYZ file of interior candidates (required for clouds without normals)."),
        click.option("--argmin", is_flag=True, hidden=True,
                     help="Pick the lowest-scoring candidate instead of the highest."),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


def _make_config(**kw) -> pipeline.RunConfig:
    return pipeline.RunConfig(**kw)


@click.group()
def main():
    """Skeletal point selection and medial skeleton extraction."""


def _run_guarded(fn) -> None:
    try:
        fn()
    except _INFEASIBLE as exc:
        click.echo(f"infeasible: {exc}", err=True)
        sys.exit(2)
    except CoveraxError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


@main.command()
@_shared_options
def run(**kw):
    """Run the full pipeline and write skeleton.skel / selected_points.xyz /
    trace.csv / metrics.json into --out."""

    def body():
        config = _make_config(**kw)
        res = pipeline.run_pipeline(config)
        click.echo(
            f"n_selected={len(res.selection.selected)} "
            f"coverage_rate={res.report.coverage_rate:.4f} "
            f"eps_two_sided={res.report.eps_two_sided * 100:.3f}% "
            f"total_ms={res.timings_ms['total_ms']:.1f}"
        )

    _run_guarded(body)


@main.command("ablate-v")
@_shared_options
@click.option("--v-list", required=True, help="Comma-separated target |V| values (>= 2).")
def ablate_v_cmd(v_list, **kw):
    """Sweep the target skeletal point count."""

    def body():
        config = _make_config(**kw)
        values = [int(x) for x in v_list.split(",") if x.strip()]
        out_csv = f"{config.out_dir}/ablate_v.csv"
        import pathlib

        pathlib.Path(config.out_dir).mkdir(parents=True, exist_ok=True)
        rows = pipeline.ablate_v(config, values, out_csv=out_csv)
        for r in rows:
            click.echo(
                f"V={r['target_v']} eps={r['eps_two_sided'] * 100:.3f}% "
                f"coverage={r['coverage_rate']:.4f}"
            )
        click.echo(f"wrote {out_csv}")

    _run_guarded(body)


@main.command("ablate-dilation")
@_shared_options
@click.option("--delta-list", required=True, help="Comma-separated delta_r values (>= 2).")
def ablate_dilation_cmd(delta_list, **kw):
    """Sweep the ball dilation delta_r."""

    def body():
        config = _make_config(**kw)
        values = [float(x) for x in delta_list.split(",") if x.strip()]
        out_csv = f"{config.out_dir}/ablate_dilation.csv"
        import pathlib

        pathlib.Path(config.out_dir).mkdir(parents=True, exist_ok=True)
        rows = pipeline.ablate_dilation(config, values, out_csv=out_csv)
        early = sum(r["terminated_early"] for r in rows)
        for r in rows:
            click.echo(
                f"delta_r={r['delta_r']} n_selected={r['n_selected']} "
                f"eps={r['eps_two_sided'] * 100:.3f}%"
            )
        click.echo(f"early terminations: {early}/{len(rows)}; wrote {out_csv}")

    _run_guarded(body)


@main.command()
@click.option("--axis", required=True, type=click.Choice(["P", "S", "V"]))
@click.option("--sizes", required=True, help="Comma-separated sizes (>= 3).")
@click.option("--samples", default=2000, show_default=True, help="Base |S|.")
@click.option("--candidates", default=10000, show_default=True, help="Base |P|.")
@click.option("--target-v", default=100, show_default=True, help="Base |V|.")
@click.option("--omega", default=1.0, show_default=True)
@click.option("--delta-r", default=0.02, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--out", "out_dir", default="out", show_default=True)
def bench(axis, sizes, samples, candidates, target_v, omega, delta_r, seed, out_dir):
    """Time the selection stage alone vs |P|, |S| or |V| (median of 3)."""

    def body():
        values = [int(x) for x in sizes.split(",") if x.strip()]
        import pathlib

        pathlib.Path(out_dir).mkdir(parents=True, exist_ok=True)
        out_csv = f"{out_dir}/bench_{axis}.csv"
        rows = pipeline.scaling_bench(
            axis,
            values,
            base_samples=samples,
            base_candidates=candidates,
            base_target_v=target_v,
            omega=omega,
            delta_r=delta_r,
            seed=seed,
            out_csv=out_csv,
        )
        for r in rows:
            click.echo(f"{axis}={r['size']} wall_ms={r['wall_ms']:.1f}")
        click.echo(f"wrote {out_csv}")

    _run_guarded(body)


if __name__ == "__main__":
    main()
