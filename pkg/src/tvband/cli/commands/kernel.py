"""``kernel``: reproducing kernel on a tensor grid."""

from pathlib import Path

import click

from tvband.application.kernel import KernelContext, kernel_grid
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
    parse_grid,
    require_grid,
    resolve_run_config,
)
from tvband.domain.models import GridSpec
from tvband.infrastructure.storage.artifacts import kernel_grid_frame


@click.command(name="kernel")
@pair_option
@grid_option
@click.option("--s-grid", callback=parse_grid, help="Second grid T0:DT:N (default: --grid).")
@mu_option
@click.option("--alpha", type=float, help="Representation level in [0, 1).")
@config_option
@out_option
def kernel(
    pair_path: Path | None,
    grid: tuple[float, float, int] | None,
    s_grid: tuple[float, float, int] | None,
    mu_w: float | None,
    alpha: float | None,
    config_path: Path | None,
    out: Path | None,
) -> None:
    """Write K(t, s) as CSV "t,s,K"; --mu-w selects the rescaled kernel."""
    config = resolve_run_config(config_path, grid=grid, mu_w=mu_w, alpha=alpha)
    pair = load_pair(pair_path, config)
    ts = require_grid(config).times()
    ss = GridSpec(*s_grid).times() if s_grid is not None else ts
    ctx = KernelContext.create(pair, config.alpha)
    values = kernel_grid(ctx, ts, ss, scaling=mobius_from(config))
    emit_frame(kernel_grid_frame(ts, ss, values), output_path(out, config))
