"""``config``: inspect and edit per-user defaults."""

import json

import click

from tvband.cli.config import (
    config_file,
    get_config_value,
    load_config,
    reset_config,
    set_config_value,
)
from tvband.infrastructure.config.settings import get_settings


@click.group(name="config")
def config() -> None:
    """Manage tvband user defaults."""


@config.command(name="show")
def show_config() -> None:
    """Display user defaults and the numerical settings in effect."""
    click.echo(f"Config file: {config_file()}\n")
    click.echo(json.dumps(load_config(), indent=2))
    click.echo("\nSettings (TVBAND_* environment):")
    click.echo(get_settings().model_dump_json(indent=2))


@config.command(name="get")
@click.argument("key")
def get_config(key: str) -> None:
    """Print the value of KEY (dotted, e.g. bandlimit.points_per_unit)."""
    missing = object()
    value = get_config_value(key, missing)
    if value is missing:
        raise click.BadParameter(f"unknown configuration key '{key}'", param_hint="KEY")
    click.echo(json.dumps(value))


@config.command(name="set")
@click.argument("key")
@click.argument("value")
def set_config(key: str, value: str) -> None:
    """Set KEY to VALUE; VALUE is parsed as JSON when possible."""
    try:
        parsed = json.loads(value)
    except json.JSONDecodeError:
        parsed = value
    try:
        set_config_value(key, parsed)
    except (TypeError, OSError) as e:
        click.echo(f"Error updating configuration: {e}", err=True)
        raise click.Abort from None
    click.echo(f"Configuration updated: {key} = {json.dumps(parsed)}")


@config.command(name="reset")
@click.confirmation_option(prompt="Restore default configuration?")
def reset() -> None:
    """Restore the default user configuration."""
    reset_config()
    click.echo(f"Configuration reset: {config_file()}")
