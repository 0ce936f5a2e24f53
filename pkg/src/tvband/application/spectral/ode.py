"""Spectral function t(s) tabulated by integrating dt/ds = 1/tau'(t).

Each unit interval [m, m+1] is integrated from the exact initial value
t(m) = t_m, so drift never carries across a node. Intervals left of the first
node are integrated backwards from it.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np
import structlog

from tvband.application.spectral.phase import pair_lattice
from tvband.application.spectral.sequences import spectral_domain
from tvband.domain.errors import OutOfWindowError, ParameterError
from tvband.domain.models import BandlimitPair, SpectralTable
from tvband.infrastructure.config.settings import get_settings
from tvband.infrastructure.solvers.ode import integrate

if TYPE_CHECKING:
    import numpy.typing as npt

logger = structlog.get_logger(__name__)

DEFAULT_SAMPLES_PER_UNIT = 16


def _default_grid(s_start: float, s_end: float, samples_per_unit: int) -> np.ndarray:
    count = max(2, math.ceil((s_end - s_start) * samples_per_unit) + 1)
    grid = np.linspace(s_start, s_end, count)
    integers = np.arange(math.ceil(s_start), math.floor(s_end) + 1, dtype=np.float64)
    return np.unique(np.concatenate([grid, integers]))


def solve_spectral_ode(
    pair: BandlimitPair,
    s_range: tuple[float, float],
    *,
    rtol: float | None = None,
    s_grid: npt.ArrayLike | None = None,
    samples_per_unit: int = DEFAULT_SAMPLES_PER_UNIT,
) -> SpectralTable:
    """Tabulate t(s) on ``s_range`` by adaptive DOP853 integration.

    Args:
        pair: Normalized bandlimit pair.
        s_range: Closed range inside the spectral domain (a, b).
        rtol: Relative integrator tolerance (``TVBAND_ODE_RTOL`` by default).
        s_grid: Explicit output abscissae inside ``s_range``.
        samples_per_unit: Density of the default grid.

    Returns:
        Table with t, t' = 1/tau'(t) and the residual |t(m) - t_m| for every
        node m reached by integration.

    Raises:
        OutOfWindowError: If the range leaves (a, b).
        StiffnessError: If the integrator step collapses.
    """
    lattice = pair_lattice(pair)
    a, b = spectral_domain(lattice, pair)
    s_start, s_end = float(s_range[0]), float(s_range[1])
    if not s_start <= s_end:
        raise ParameterError(f"s range must be ordered, got {s_range}")
    if not (a < s_start and s_end < b):
        raise OutOfWindowError(
            f"s range [{s_start!r}, {s_end!r}] leaves the spectral domain ({a!r}, {b!r})",
            [s for s in (s_start, s_end) if not a < s < b],
        )
    if rtol is None:
        rtol = get_settings().ode_rtol

    grid = (
        _default_grid(s_start, s_end, samples_per_unit)
        if s_grid is None
        else np.unique(np.asarray(s_grid, dtype=np.float64))
    )
    if grid.size and (grid[0] < s_start or grid[-1] > s_end):
        raise OutOfWindowError("s grid extends beyond the s range", grid[[0, -1]])

    lo, hi = pair.indices.lo, pair.indices.hi
    first_unit = math.floor(s_start)
    last_unit = max(first_unit, math.ceil(s_end) - 1)
    units = np.clip(np.floor(grid), first_unit, last_unit).astype(np.int64)

    def rhs(_s: float, t: float) -> float:
        return 1.0 / lattice.rate(t)

    t_values = np.empty_like(grid)
    residuals: dict[int, float] = {}
    for m in range(first_unit, last_unit + 1):
        seg_lo = max(s_start, float(m))
        seg_hi = min(s_end, float(m + 1))
        mask = units == m
        if m >= lo:
            values, t_end = integrate(
                rhs, float(m), seg_hi, float(pair.nodes[m - lo]), grid[mask], rtol=rtol,
            )
            if m + 1 <= hi and seg_hi == m + 1:
                residuals[m + 1] = abs(t_end - float(pair.nodes[m + 1 - lo]))
        else:
            values, _ = integrate(
                rhs, float(lo), seg_lo, float(pair.nodes[0]), grid[mask], rtol=rtol,
            )
        t_values[mask] = values

    t_prime = 1.0 / lattice.rate_many(t_values) if grid.size else np.empty(0)
    table = SpectralTable(
        s_grid=grid,
        t_values=t_values,
        t_prime_values=t_prime,
        a=a,
        b=b,
        endpoint_residuals=residuals,
    )
    logger.info(
        "Spectral ODE integrated",
        operation="solve_spectral_ode",
        status="success",
        s_start=s_start,
        s_end=s_end,
        points=int(grid.size),
        max_endpoint_residual=table.max_endpoint_residual,
    )
    return table
