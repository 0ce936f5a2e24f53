"""Main CLI entry point for tvband."""

import logging
import os
import sys
from typing import Any

import click

from tvband import __version__
from tvband.domain.errors import EXIT_VALIDATION, TvbandError
from tvband.infrastructure.logging.setup import setup_logging

os.environ["LOG_LEVEL"] = os.environ.get("LOG_LEVEL", "WARNING")
setup_logging()
logger = logging.getLogger(__name__)


class TvbandGroup(click.Group):
    """Group that turns library errors into their exit codes."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except TvbandError as e:
            click.echo(f"Error: {e}", err=True)
            ctx.exit(e.exit_code)


@click.group(cls=TvbandGroup)
@click.version_option(version=__version__, prog_name="tvband")
@click.option(
    "--verbose",
    "-v",
    is_flag=True,
    help="Enable verbose output (INFO level logging)",
)
@click.pass_context
def cli(ctx: click.Context, verbose: bool) -> None:
    """tvband - sampling and reconstruction with a time-varying bandlimit.

    Every command reads a bandlimit pair JSON (--pair) and writes CSV tables or
    JSON reports. Exit codes: 0 success, 2 invalid input, 3 numeric failure.
    """
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose

    log_level = logging.INFO if verbose else logging.WARNING
    logging.root.setLevel(log_level)
    for handler in logging.root.handlers:
        handler.setLevel(log_level)
    if verbose:
        logger.info("Verbose mode enabled")


from tvband.cli.commands import (  # noqa: E402
    bandlimit,
    config_cmd,
    kernel,
    pair_cmds,
    sequences,
    signals,
    verify,
)

cli.add_command(pair_cmds.normalize)
cli.add_command(pair_cmds.paley_wiener)
cli.add_command(sequences.sequences)
cli.add_command(sequences.spectral)
cli.add_command(kernel.kernel)
cli.add_command(signals.filter_signal)
cli.add_command(signals.reconstruct_signal)
cli.add_command(bandlimit.bandlimit)
cli.add_command(verify.verify)
cli.add_command(config_cmd.config)


def main() -> None:
    """Run the CLI, mapping failures to exit codes 2 (input), 3 (numeric) or 1."""
    try:
        code = cli(standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        sys.exit(1)
    except click.exceptions.UsageError as e:
        e.show()
        sys.exit(EXIT_VALIDATION)
    except click.exceptions.ClickException as e:
        e.show()
        sys.exit(e.exit_code)
    except TvbandError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(e.exit_code)
    except Exception as e:
        click.echo(f"Unexpected error: {e}", err=True)
        if logger.isEnabledFor(logging.INFO):
            import traceback

            traceback.print_exc()
        sys.exit(1)
    sys.exit(code if isinstance(code, int) else 0)


if __name__ == "__main__":
    main()
