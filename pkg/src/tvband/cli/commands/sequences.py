"""Sampling lattices and the spectral function: ``sequences`` and ``spectral``."""

from pathlib import Path

import click
import structlog

from tvband.application.spectral import (
    pair_lattice,
    sampling_sequences,
    solve_spectral_ode,
)
from tvband.cli.utils import (
    config_option,
    emit_frame,
    explicit_setting,
    load_pair,
    out_option,
    output_path,
    pair_option,
    parse_window,
    resolve_run_config,
    theta_option,
    tol_option,
    window_option,
)
from tvband.domain.schemas import ExceptionalLattice, SequencesSidecar
from tvband.infrastructure.storage.artifacts import (
    sample_sets_frame,
    spectral_table_frame,
    write_model,
)

logger = structlog.get_logger(__name__)


@click.command(name="sequences")
@pair_option
@theta_option
@window_option
@config_option
@out_option
@click.option(
    "--sidecar",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Exceptional-level report (default: OUT with a .json suffix).",
)
def sequences(
    pair_path: Path | None,
    thetas: list[float] | None,
    window: tuple[float, float] | None,
    config_path: Path | None,
    out: Path | None,
    sidecar: Path | None,
) -> None:
    """Write the sampling sequences t_n(theta) as CSV "theta,n,t,t_prime"."""
    config = resolve_run_config(config_path, thetas=thetas, window=window)
    pair = load_pair(pair_path, config)
    span = config.window or (float("-inf"), float("inf"))
    sample_sets = sampling_sequences(pair, config.thetas, span)
    out = output_path(out, config)
    emit_frame(sample_sets_frame(sample_sets), out)

    theta_star = pair_lattice(pair).theta_star()
    report = SequencesSidecar(
        theta_star=theta_star,
        exceptional=[
            ExceptionalLattice(theta=s.theta, theta_star=theta_star, finite_points=s.size)
            for s in sample_sets
            if s.exceptional
        ],
    )
    if report.exceptional:
        click.echo(
            f"Warning: exceptional level(s) {[e.theta for e in report.exceptional]} "
            "have a sampling point at infinity",
            err=True,
        )
    if sidecar is None and out is not None:
        sidecar = out.with_suffix(".json")
    if sidecar is not None:
        write_model(sidecar, report)


@click.command(name="spectral")
@pair_option
@click.option(
    "--range",
    "s_range",
    required=True,
    callback=parse_window,
    help="Spectral variable range LO:HI.",
)
@click.option("--samples-per-unit", type=click.IntRange(min=1), default=16, show_default=True)
@tol_option
@config_option
@out_option
def spectral(
    pair_path: Path | None,
    s_range: tuple[float, float],
    samples_per_unit: int,
    tol: float | None,
    config_path: Path | None,
    out: Path | None,
) -> None:
    """Integrate the spectral ODE and write "s,t,t_prime".

    The ODE tolerance comes from --tol or the --config file, else from
    TVBAND_ODE_RTOL; the user-default tol is the quadrature tolerance.
    """
    config = resolve_run_config(config_path, tol=tol)
    pair = load_pair(pair_path, config)
    rtol = explicit_setting(config_path, "tol", tol)
    table = solve_spectral_ode(pair, s_range, rtol=rtol, samples_per_unit=samples_per_unit)
    logger.info(
        "Spectral table computed",
        operation="spectral",
        status="success",
        rows=int(table.s_grid.size),
        max_endpoint_residual=table.max_endpoint_residual,
    )
    emit_frame(spectral_table_frame(table), output_path(out, config))
    click.echo(f"Max integer-endpoint residual: {table.max_endpoint_residual:.3e}", err=True)
