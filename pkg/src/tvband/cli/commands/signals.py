"""Signal processing commands: ``filter`` and ``reconstruct``."""

from pathlib import Path

import click
import numpy as np
import structlog

from tvband.application.kernel import KernelContext
from tvband.application.sampling import lowpass_project, reconstruct
from tvband.application.spectral import sampling_sequence
from tvband.cli.utils import (
    config_option,
    emit_frame,
    grid_option,
    load_pair,
    mobius_from,
    mu_option,
    out_option,
    output_path,
    pair_option,
    require_grid,
    resolve_run_config,
    theta_option,
    tol_option,
)
from tvband.domain.errors import ParameterError
from tvband.domain.models import SampledSignal
from tvband.infrastructure.storage.artifacts import (
    grid_signal_frame,
    read_grid_signal,
    read_sample_values,
    write_model,
)

logger = structlog.get_logger(__name__)

SAMPLE_TIME_RTOL = 1e-9

signal_option = click.option(
    "--signal",
    "signal_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    required=True,
    help="Signal CSV on a uniform grid (t,value or t,re,im).",
)


def _single_theta(thetas: list[float]) -> float:
    if len(thetas) != 1:
        raise ParameterError(f"this command takes one theta, got {thetas}")
    return thetas[0]


@click.command(name="filter")
@pair_option
@signal_option
@theta_option
@mu_option
@grid_option
@tol_option
@config_option
@out_option
@click.option(
    "--report",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Write a JSON summary of the projection.",
)
def filter_signal(
    pair_path: Path | None,
    signal_path: Path,
    thetas: list[float] | None,
    mu_w: float | None,
    grid: tuple[float, float, int] | None,
    tol: float | None,
    config_path: Path | None,
    out: Path | None,
    report: Path | None,
) -> None:
    """Project a raw signal onto the local bandlimit space (time-varying low-pass).

    Without --mu-w the target space is the one rescaled by tau'. The output is
    evaluated on the signal grid unless --grid is given.
    """
    config = resolve_run_config(
        config_path,
        thetas=thetas,
        mu_w=mu_w,
        grid=grid,
        tol=tol,
    )
    pair = load_pair(pair_path, config)
    raw = read_grid_signal(signal_path)
    ctx = KernelContext.create(pair, config.alpha)
    mu_param = mobius_from(config)
    result = lowpass_project(
        ctx,
        _single_theta(config.thetas),
        raw,
        "identity" if mu_param is None else mu_param,
        tol=config.tol,
    )
    filtered = result.on_grid(require_grid(config)) if config.grid else result.output
    if filtered is None:
        raise ParameterError("projection produced no output grid")
    emit_frame(grid_signal_frame(filtered), output_path(out, config))
    if report is not None:
        write_model(report, result.report())


@click.command(name="reconstruct")
@pair_option
@click.option(
    "--samples",
    "samples_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    required=True,
    help="Sample values at t_n(theta) as CSV t,value or t,re,im.",
)
@theta_option
@mu_option
@grid_option
@config_option
@out_option
def reconstruct_signal(
    pair_path: Path | None,
    samples_path: Path,
    thetas: list[float] | None,
    mu_w: float | None,
    grid: tuple[float, float, int] | None,
    config_path: Path | None,
    out: Path | None,
) -> None:
    """Rebuild a signal on --grid from its samples on the theta lattice."""
    config = resolve_run_config(config_path, thetas=thetas, mu_w=mu_w, grid=grid)
    pair = load_pair(pair_path, config)
    theta = _single_theta(config.thetas)
    times, values = read_sample_values(samples_path)
    lattice = sampling_sequence(pair, theta)
    order = np.argsort(times, kind="stable")
    times, values = times[order], values[order]
    if times.shape != lattice.points.shape or not np.allclose(
        times,
        lattice.points,
        rtol=SAMPLE_TIME_RTOL,
        atol=SAMPLE_TIME_RTOL,
    ):
        raise ParameterError(
            f"{samples_path}: sample times do not match the {lattice.size} points "
            f"of the theta={theta!r} lattice",
        )
    ctx = KernelContext.create(pair, config.alpha)
    rebuilt = reconstruct(
        ctx,
        SampledSignal(lattice, values),
        require_grid(config),
        scaling=mobius_from(config),
    )
    emit_frame(grid_signal_frame(rebuilt), output_path(out, config))
