"""Sample-count comparison between time-varying and peak-rate uniform sampling."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np
import structlog

from tvband.application.charfun.bandlimit import bandlimit_profile, compute_w_star
from tvband.domain.errors import ParameterError
from tvband.domain.schemas import NyquistReport

if TYPE_CHECKING:
    from tvband.application.kernel.context import KernelContext

logger = structlog.get_logger(__name__)

DEFAULT_POINTS_PER_UNIT = 64


def nyquist_comparison(
    ctx: KernelContext,
    window: tuple[float, float],
    *,
    points_per_unit: int = DEFAULT_POINTS_PER_UNIT,
) -> NyquistReport:
    """Count nodes in ``window`` against length * max(omega) / pi.

    omega is sampled on a uniform grid of ``points_per_unit`` points per unit
    length. An empty window reports zero counts and no omega statistics.
    """
    lo, hi = window
    if not lo <= hi:
        raise ParameterError(f"window must satisfy LO <= HI, got {window}")
    pair = ctx.pair
    w_star = compute_w_star(pair)
    tv_count = int(np.count_nonzero((pair.nodes >= lo) & (pair.nodes <= hi)))
    length = hi - lo

    if length == 0.0:
        return NyquistReport(
            window=(lo, hi),
            tv_sample_count=0,
            nyquist_count=0.0,
            ratio=None,
            omega_min=None,
            omega_max=None,
            omega_mean=None,
            w_star=w_star,
        )

    count = max(2, math.ceil(length * points_per_unit) + 1)
    omega = bandlimit_profile(pair, np.linspace(lo, hi, count)).omega
    omega_max = float(omega.max())
    nyquist_count = length * omega_max / math.pi
    report = NyquistReport(
        window=(lo, hi),
        tv_sample_count=tv_count,
        nyquist_count=nyquist_count,
        ratio=tv_count / nyquist_count if nyquist_count > 0 else None,
        omega_min=float(omega.min()),
        omega_max=omega_max,
        omega_mean=float(omega.mean()),
        w_star=w_star,
    )
    logger.info(
        "Nyquist comparison computed",
        operation="nyquist_comparison",
        status="success",
        tv_sample_count=tv_count,
        nyquist_count=nyquist_count,
    )
    return report
