"""``bandlimit``: time-varying bandlimit profile and Nyquist comparison."""

from pathlib import Path

import click
import pandas as pd

from tvband.application.charfun import bandlimit_profile
from tvband.application.kernel import KernelContext
from tvband.application.sampling import nyquist_comparison
from tvband.cli.config import get_config_value
from tvband.cli.utils import (
    config_option,
    emit_frame,
    emit_model,
    grid_option,
    load_pair,
    out_option,
    output_path,
    pair_option,
    require_grid,
    require_window,
    resolve_run_config,
    window_option,
)


@click.command(name="bandlimit")
@pair_option
@grid_option
@window_option
@config_option
@out_option
@click.option(
    "--report",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Nyquist comparison JSON over --window ('-' for standard output).",
)
def bandlimit(
    pair_path: Path | None,
    grid: tuple[float, float, int] | None,
    window: tuple[float, float] | None,
    config_path: Path | None,
    out: Path | None,
    report: Path | None,
) -> None:
    """Write omega(t) with tau and tau' as CSV "t,tau,tau_prime,omega"."""
    config = resolve_run_config(config_path, grid=grid, window=window)
    pair = load_pair(pair_path, config)
    profile = bandlimit_profile(pair, require_grid(config).times())
    frame = pd.DataFrame(
        {
            "t": profile.times,
            "tau": profile.tau,
            "tau_prime": profile.tau_prime,
            "omega": profile.omega,
        },
    )
    emit_frame(frame, output_path(out, config))
    click.echo(f"w* = {profile.w_star!r}", err=True)

    if report is not None:
        ctx = KernelContext.create(pair, config.alpha)
        nyquist = nyquist_comparison(
            ctx,
            require_window(config),
            points_per_unit=int(get_config_value("bandlimit.points_per_unit", 64)),
        )
        emit_model(nyquist, None if str(report) == "-" else report)
