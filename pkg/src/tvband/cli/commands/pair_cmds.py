"""Pair preparation: ``normalize`` and ``paley-wiener``."""

from pathlib import Path

import click
import structlog

from tvband.application.core import (
    admissibility_sum,
    normalize_pair,
    paley_wiener_pair,
    require_valid,
)
from tvband.cli.utils import load_pair, out_option, pair_option
from tvband.domain.models import BandlimitPair
from tvband.infrastructure.storage.artifacts import pair_to_document, write_pair

logger = structlog.get_logger(__name__)


def _emit_pair(pair: BandlimitPair, out: Path | None) -> None:
    total = admissibility_sum(pair)
    if out is None:
        click.echo(pair_to_document(pair, total).model_dump_json(indent=2))
        return
    write_pair(out, pair, total)
    click.echo(f"Wrote {pair.size}-node pair to {out} (sum = {total!r})", err=True)


@click.command(name="normalize")
@pair_option
@out_option
def normalize(pair_path: Path | None, out: Path | None) -> None:
    """Check a pair and rescale its weights so that sum t'/(1+t^2) = pi."""
    pair = load_pair(pair_path)
    require_valid(pair)
    normalized = normalize_pair(pair)
    logger.info(
        "Pair normalized",
        operation="normalize",
        status="success",
        size=normalized.size,
        scale=normalized.scale,
    )
    _emit_pair(normalized, out)


@click.command(name="paley-wiener")
@click.option("--bandwidth", "-A", type=float, default=3.141592653589793, show_default=True)
@click.option("--half-width", "-N", type=click.IntRange(min=0), required=True)
@click.option("--raw", is_flag=True, help="Skip normalization.")
@out_option
def paley_wiener(bandwidth: float, half_width: int, raw: bool, out: Path | None) -> None:
    """Write the truncated Paley-Wiener pair t_n = n pi/A, t'_n = (pi/A) tanh A."""
    pair = paley_wiener_pair(bandwidth, half_width, normalize=not raw)
    _emit_pair(pair, out)
