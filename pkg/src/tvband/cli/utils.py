"""Option parsing and I/O helpers shared by the tvband commands."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import click
import pandas as pd
from pydantic import BaseModel, ValidationError
from returns.pipeline import is_successful

from tvband.cli.config import load_config
from tvband.domain.errors import InvalidPairError, ParameterError
from tvband.domain.models import BandlimitPair, GridSpec, MobiusParam
from tvband.domain.schemas import RunConfig
from tvband.infrastructure.config.loaders import load_pair_document, load_run_config
from tvband.infrastructure.storage.artifacts import FLOAT_FORMAT, write_frame, write_model

RUN_CONFIG_KEYS = ("thetas", "window", "grid", "mu_w", "tol", "alpha")


def parse_window(
    ctx: click.Context | None,
    param: click.Parameter | None,
    value: str | None,
) -> tuple[float, float] | None:
    """Click callback for ``LO:HI``."""
    if value is None:
        return None
    parts = value.split(":")
    try:
        lo, hi = (float(p) for p in parts)
    except ValueError:
        raise click.BadParameter(f"expected LO:HI, got {value!r}") from None
    if not lo <= hi:
        raise click.BadParameter(f"LO must not exceed HI in {value!r}")
    return lo, hi


def parse_grid(
    ctx: click.Context | None,
    param: click.Parameter | None,
    value: str | None,
) -> tuple[float, float, int] | None:
    """Click callback for ``T0:DT:N``."""
    if value is None:
        return None
    parts = value.split(":")
    if len(parts) != 3:
        raise click.BadParameter(f"expected T0:DT:N, got {value!r}")
    try:
        t0, dt, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise click.BadParameter(f"expected T0:DT:N, got {value!r}") from None
    if dt <= 0 or n < 1:
        raise click.BadParameter(f"grid needs DT > 0 and N >= 1, got {value!r}")
    return t0, dt, n


def parse_thetas(
    ctx: click.Context | None,
    param: click.Parameter | None,
    value: str | None,
) -> list[float] | None:
    """Click callback for a comma-separated theta list."""
    if value is None:
        return None
    try:
        thetas = [float(item) for item in value.split(",") if item.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated numbers, got {value!r}") from None
    if not thetas:
        raise click.BadParameter("theta list is empty")
    for theta in thetas:
        if not 0.0 <= theta < 1.0:
            raise click.BadParameter(f"theta must lie in [0, 1), got {theta}")
    return thetas


def resolve_run_config(config_path: Path | None, **flags: Any) -> RunConfig:
    """Layer CLI flags over the --config file over the user defaults.

    Flags left as ``None`` do not override.
    """
    user = load_config()
    merged: dict[str, Any] = {key: user.get(key) for key in RUN_CONFIG_KEYS}
    merged = {key: value for key, value in merged.items() if value is not None}
    if config_path is not None:
        result = load_run_config(config_path)
        if not is_successful(result):
            raise click.BadParameter(result.failure(), param_hint="--config")
        merged.update(result.unwrap().model_dump(exclude_unset=True))
    merged.update({key: value for key, value in flags.items() if value is not None})
    try:
        return RunConfig.model_validate(merged)
    except ValidationError as e:
        raise ParameterError(str(e)) from e


def explicit_setting(config_path: Path | None, key: str, flag: Any) -> Any:
    """Value of ``key`` from its flag or the --config file, skipping user defaults."""
    if flag is not None:
        return flag
    if config_path is None:
        return None
    result = load_run_config(config_path)
    if not is_successful(result):
        raise click.BadParameter(result.failure(), param_hint="--config")
    document = result.unwrap()
    return getattr(document, key) if key in document.model_fields_set else None


def load_pair(path: Path | None, config: RunConfig | None = None) -> BandlimitPair:
    """Read the pair named by --pair, or by the run config's ``pair_path``."""
    if path is None and config is not None:
        path = config.pair_path
    if path is None:
        raise click.UsageError("a pair file is required (--pair or pair_path in --config)")
    result = load_pair_document(path)
    if not is_successful(result):
        raise InvalidPairError(result.failure())
    return result.unwrap()


def require_grid(config: RunConfig) -> GridSpec:
    if config.grid is None:
        raise click.UsageError("an evaluation grid is required (--grid T0:DT:N)")
    t0, dt, n = config.grid
    return GridSpec(t0, dt, n)


def require_window(config: RunConfig) -> tuple[float, float]:
    if config.window is None:
        raise click.UsageError("a window is required (--window LO:HI)")
    return config.window


def mobius_from(config: RunConfig) -> MobiusParam | None:
    return None if config.mu_w is None else MobiusParam(config.mu_w)


def output_path(out: Path | None, config: RunConfig) -> Path | None:
    return out if out is not None else config.output_path


def emit_frame(frame: pd.DataFrame, out: Path | None) -> None:
    """Write a CSV table to ``out`` or to standard output."""
    if out is None:
        click.echo(frame.to_csv(index=False, float_format=FLOAT_FORMAT), nl=False)
    else:
        write_frame(out, frame)
        click.echo(f"Wrote {len(frame)} rows to {out}", err=True)


def emit_model(model: BaseModel, out: Path | None) -> None:
    """Write a JSON report to ``out`` or to standard output."""
    if out is None:
        click.echo(model.model_dump_json(indent=2))
    else:
        write_model(out, model)
        click.echo(f"Wrote {out}", err=True)


pair_option = click.option(
    "--pair",
    "pair_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Bandlimit pair JSON file.",
)
config_option = click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Run configuration JSON; flags override its values.",
)
out_option = click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Output file (standard output when omitted).",
)
theta_option = click.option(
    "--theta",
    "thetas",
    callback=parse_thetas,
    help="Comma-separated levels in [0, 1), e.g. 0,0.25,0.5.",
)
window_option = click.option("--window", callback=parse_window, help="Time window LO:HI.")
grid_option = click.option("--grid", callback=parse_grid, help="Uniform grid T0:DT:N.")
mu_option = click.option("--mu-w", "mu_w", type=float, help="Mobius scaling parameter w.")
tol_option = click.option("--tol", type=float, help="Relative tolerance.")
