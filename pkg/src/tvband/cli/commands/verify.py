"""``verify``: oracle-versus-analytic cross checks on one pair."""

from pathlib import Path

import click

from tvband.application.oracle import run_verification
from tvband.cli.config import get_config_value
from tvband.cli.utils import (
    config_option,
    emit_model,
    load_pair,
    out_option,
    output_path,
    pair_option,
    resolve_run_config,
    theta_option,
)
from tvband.domain.errors import EXIT_NUMERIC


@click.command(name="verify")
@pair_option
@theta_option
@config_option
@out_option
@click.pass_context
def verify(
    ctx: click.Context,
    pair_path: Path | None,
    thetas: list[float] | None,
    config_path: Path | None,
    out: Path | None,
) -> None:
    """Run the matrix-model cross checks and write a pass/fail JSON report.

    Exits with status 3 when any check fails.
    """
    if thetas is None and config_path is None:
        thetas = list(get_config_value("verify.thetas", [0.0, 0.25, 0.5, 0.75]))
    config = resolve_run_config(config_path, thetas=thetas)
    pair = load_pair(pair_path, config)
    report = run_verification(pair, config.thetas)
    emit_model(report, output_path(out, config))
    failed = [check for check in report.checks if check.status == "fail"]
    for check in failed:
        click.echo(
            f"FAIL {check.name}: residual {check.residual:.3e} > {check.threshold:.1e}",
            err=True,
        )
    if failed:
        ctx.exit(EXIT_NUMERIC)
    click.echo(f"All {len(report.checks)} checks passed", err=True)
