"""Local cubic (4-point Lagrange) interpolation of uniform-grid signals."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from tvband.domain.errors import OutOfWindowError

if TYPE_CHECKING:
    import numpy.typing as npt

    from tvband.domain.models import GridSignal

STENCIL = 4
# Slack for points that sit on a window edge up to rounding
EDGE_RTOL = 1e-12


def signal_extent(signal: GridSignal) -> tuple[float, float]:
    """Intersection of the declared window with the grid extent."""
    w_lo, w_hi = signal.window or (signal.t0, signal.end)
    return max(w_lo, signal.t0), min(w_hi, signal.end)


def check_inside(signal: GridSignal, points: np.ndarray) -> None:
    lo, hi = signal_extent(signal)
    slack = EDGE_RTOL * max(1.0, abs(lo), abs(hi))
    outside = (points < lo - slack) | (points > hi + slack)
    if np.any(outside):
        offending = points[outside]
        preview = ", ".join(f"{p:.6g}" for p in offending[:5])
        raise OutOfWindowError(
            f"{offending.size} point(s) outside the signal window [{lo}, {hi}]: {preview}",
            offending,
        )


def interpolate(signal: GridSignal, points: npt.ArrayLike) -> np.ndarray:
    """Evaluate the piecewise cubic through the four grid samples around each point.

    Signals with fewer than four samples use the full grid.

    Raises:
        OutOfWindowError: If a point lies outside the signal window.
    """
    x = np.atleast_1d(np.asarray(points, dtype=np.float64))
    check_inside(signal, x)
    values = signal.values
    count = values.size
    order = min(STENCIL, count)
    position = (x - signal.t0) / signal.dt
    cell = np.floor(position).astype(np.int64)
    start = np.clip(cell - (order // 2 - 1), 0, count - order)

    result = np.zeros(x.shape, dtype=values.dtype)
    for j in range(order):
        basis = np.ones_like(position)
        for k in range(order):
            if k != j:
                basis *= (position - (start + k)) / (j - k)
        result = result + basis * values[start + j]
    return result
