"""Sampling a signal on a lattice and rebuilding it from its samples."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np
import structlog

from tvband.application.kernel.evaluate import (
    Scaling,
    kernel_grid,
    reparametrization_rate,
)
from tvband.application.sampling.interpolation import interpolate
from tvband.domain.errors import SingularParameterError
from tvband.domain.models import GridSignal, GridSpec, SampledSignal, SampleSet
from tvband.shared.summation import fsum

if TYPE_CHECKING:
    import numpy.typing as npt

    from tvband.application.kernel.context import KernelContext
    from tvband.domain.types import SignalFunction

logger = structlog.get_logger(__name__)


def evaluate_signal(f: GridSignal | SignalFunction, points: npt.ArrayLike) -> np.ndarray:
    x = np.atleast_1d(np.asarray(points, dtype=np.float64))
    if isinstance(f, GridSignal):
        return interpolate(f, x)
    values = np.asarray(f(x))
    return np.broadcast_to(values, x.shape).copy()


def sample_signal(f: GridSignal | SignalFunction, samples: SampleSet) -> SampledSignal:
    """Values f(t_n(theta)) in point order.

    Grid signals are interpolated with local cubics; callables are evaluated
    directly on the point array.

    Raises:
        OutOfWindowError: If a sample point falls outside a grid signal's window.
    """
    return SampledSignal(samples, evaluate_signal(f, samples.points))


def sample_energy(values: npt.ArrayLike) -> float:
    """sum |f(t_n)|^2; equals ||f||^2 for members of the unscaled space."""
    return fsum(np.abs(np.asarray(values)) ** 2)


def reconstruct(
    ctx: KernelContext,
    sampled: SampledSignal,
    eval_grid: GridSpec | GridSignal,
    *,
    scaling: Scaling = None,
) -> GridSignal:
    """f(t) = sum_n f(t_n) K(t, t_n) / K(t_n, t_n) on the evaluation grid.

    ``scaling`` selects the unscaled kernel (None) or a rescaled space.

    Raises:
        SingularParameterError: If the samples come from the exceptional level.
    """
    samples = sampled.samples
    if samples.exceptional:
        raise SingularParameterError(
            f"theta={samples.theta!r} is exceptional; its samples do not determine f",
        )
    if not samples.covers_line:
        logger.warning(
            "Reconstructing from a windowed sample set",
            operation="reconstruct",
            status="warning",
            window=list(samples.window),
        )
    grid = eval_grid.spec if isinstance(eval_grid, GridSignal) else eval_grid
    times = grid.times()
    if samples.size == 0:
        return GridSignal.on_grid(grid, np.zeros(times.size, dtype=sampled.values.dtype))

    diagonal = reparametrization_rate(ctx, samples.points, scaling)
    matrix = kernel_grid(ctx, times, samples.points, scaling=scaling)
    values = matrix @ (sampled.values / diagonal)
    logger.info(
        "Signal reconstructed",
        operation="reconstruct",
        status="success",
        theta=samples.theta,
        samples=samples.size,
        grid_points=grid.n,
    )
    return GridSignal.on_grid(grid, values)


def max_abs_error(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    diff = np.abs(np.asarray(a) - np.asarray(b))
    return float(diff.max()) if diff.size else 0.0


def l2_norm_on_grid(signal: GridSignal) -> float:
    return math.sqrt(signal.dt * sample_energy(signal.values))
