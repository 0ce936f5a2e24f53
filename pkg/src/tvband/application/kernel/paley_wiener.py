"""Closed-form Paley-Wiener kernel and truncation convergence study."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
import structlog

from tvband.application.core.pairs import paley_wiener_pair
from tvband.application.kernel.context import KernelContext
from tvband.application.kernel.evaluate import kernel_grid
from tvband.domain.errors import ParameterError

if TYPE_CHECKING:
    from collections.abc import Sequence

    import numpy.typing as npt

logger = structlog.get_logger(__name__)


def pw_kernel_oracle(
    bandwidth: float,
    t: npt.ArrayLike,
    s: npt.ArrayLike,
) -> float | np.ndarray:
    """sin(A(t - s)) / (A(t - s)), equal to 1 at t = s.

    Example:
        >>> round(pw_kernel_oracle(np.pi, 0.5, 0.0), 6)
        0.63662
    """
    if not bandwidth > 0:
        raise ParameterError(f"bandwidth must be positive, got {bandwidth!r}")
    value = np.sinc(bandwidth * (np.asarray(t) - np.asarray(s)) / np.pi)
    return float(value) if np.ndim(value) == 0 else value


@dataclass(frozen=True, slots=True)
class ConvergenceRow:
    half_width: int
    max_error: float


def pw_convergence_table(
    bandwidth: float,
    half_widths: Sequence[int],
    grid: npt.ArrayLike,
) -> list[ConvergenceRow]:
    """Max |K - sinc| over grid x grid for each truncation |n| <= N."""
    points = np.asarray(grid, dtype=np.float64)
    exact = pw_kernel_oracle(bandwidth, points[:, None], points[None, :])
    rows = []
    for half_width in half_widths:
        ctx = KernelContext.create(paley_wiener_pair(bandwidth, half_width))
        error = float(np.max(np.abs(kernel_grid(ctx, points, points) - exact)))
        rows.append(ConvergenceRow(half_width, error))
        logger.info(
            "Paley-Wiener truncation compared",
            operation="pw_convergence_table",
            status="success",
            half_width=half_width,
            max_error=error,
        )
    return rows
