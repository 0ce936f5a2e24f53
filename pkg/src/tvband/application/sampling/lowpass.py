"""Time-varying low-pass filter: orthogonal projection onto the scaled space.

P f = sum_n c_n K(., t_n) / K(t_n, t_n) with c_n = <K(., t_n), f> in L^2(R).
Coefficients are integrated with composite Gauss-Legendre panels bounded by
lattice points (and grid points for sampled input), refined by halving until
two successive levels agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING

import numpy as np
import structlog

from tvband.application.core.lattice import BLOCK_ELEMENTS
from tvband.application.kernel.evaluate import (
    Scaling,
    features,
    kernel_grid,
    reparametrization_rate,
)
from tvband.application.sampling.interpolation import signal_extent
from tvband.application.sampling.signals import evaluate_signal
from tvband.application.spectral.sequences import sampling_sequence
from tvband.domain.errors import AccuracyError, ParameterError, SingularParameterError
from tvband.domain.models import GridSignal, GridSpec, MobiusParam, SampleSet
from tvband.domain.schemas import LowpassReport
from tvband.infrastructure.config.settings import get_settings
from tvband.infrastructure.solvers.quadrature import panel_rule

if TYPE_CHECKING:
    import numpy.typing as npt

    from tvband.application.kernel.context import KernelContext
    from tvband.domain.types import FloatArray, SignalFunction

logger = structlog.get_logger(__name__)

# Panels per mapped infinite tail before refinement
TAIL_PANELS = 8
# Margin around the outermost lattice points before tails start
TAIL_MARGIN = 1.0


@dataclass(frozen=True, slots=True, eq=False)
class LowpassResult:
    """Projection coefficients and the filtered signal.

    Attributes:
        ctx: Kernel context used.
        samples: Lattice t_n(theta) carrying the expansion.
        scaling: Kernel rescaling of the target space.
        coefficients: c_n = <K(., t_n), f>.
        normalizers: K(t_n, t_n) for the rescaled kernel.
        tail_estimate: Bound on coefficients lost outside the window.
        refinements: Panel halvings needed to converge.
        quadrature_points: Points used at the accepted level.
        output: Filtered signal on the input grid, if there was one.
    """

    ctx: KernelContext
    samples: SampleSet
    scaling: Scaling
    coefficients: np.ndarray
    normalizers: FloatArray
    tail_estimate: float
    refinements: int
    quadrature_points: int
    window: tuple[float, float]
    output: GridSignal | None = None

    def evaluate(self, ts: npt.ArrayLike) -> np.ndarray:
        matrix = kernel_grid(self.ctx, ts, self.samples.points, scaling=self.scaling)
        return matrix @ (self.coefficients / self.normalizers)

    def on_grid(self, grid: GridSpec) -> GridSignal:
        return GridSignal.on_grid(grid, self.evaluate(grid.times()))

    def report(self) -> LowpassReport:
        mu_w = self.scaling.w.real if isinstance(self.scaling, MobiusParam) else None
        return LowpassReport(
            theta=self.samples.theta,
            mu_w=mu_w,
            window=self.window,
            coefficients=int(self.coefficients.size),
            refinements=self.refinements,
            quadrature_points=self.quadrature_points,
            tail_estimate=self.tail_estimate,
        )


def _breaks(lo: float, hi: float, *extra: np.ndarray) -> np.ndarray:
    inner = np.concatenate([e[(e > lo) & (e < hi)] for e in extra]) if extra else []
    return np.unique(np.concatenate([[lo, hi], inner]))


class _Integrand:
    """Quadrature of a(x) f(x) phi(x) accumulated in memory-bounded blocks."""

    def __init__(
        self,
        ctx: KernelContext,
        f: GridSignal | SignalFunction,
        scaling: Scaling,
    ) -> None:
        self.ctx = ctx
        self.f = f
        self.scaling = scaling
        self.block = max(1, BLOCK_ELEMENTS // ctx.lattice.size)

    def accumulate(self, points: np.ndarray, weights: np.ndarray) -> tuple[np.ndarray, float]:
        """Moments against the features, and the L^2 energy of f on the same rule."""
        total: np.ndarray | None = None
        energy = 0.0
        for start in range(0, points.size, self.block):
            x = points[start : start + self.block]
            w = weights[start : start + self.block]
            amplitude = np.sqrt(reparametrization_rate(self.ctx, x, self.scaling))
            f_values = evaluate_signal(self.f, x)
            energy += float(np.sum(np.abs(f_values) ** 2 * w))
            part = features(self.ctx, x).T @ (f_values * amplitude * w)
            total = part if total is None else total + part
        if total is None:
            return np.zeros(self.ctx.lattice.size), energy
        return total, energy


def _mapped_tail(
    anchor: float,
    direction: float,
    order: int,
    level: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Rule for [anchor, inf) (direction +1) or (-inf, anchor] (direction -1).

    Uses x = anchor + direction * L (1 - u) / u on u in (0, 1].
    """
    scale = max(1.0, abs(anchor))
    u, wu = panel_rule(np.linspace(0.0, 1.0, TAIL_PANELS + 1), order, level)
    x = anchor + direction * scale * (1.0 - u) / u
    return x, wu * scale / u**2


def lowpass_project(
    ctx: KernelContext,
    theta: float,
    f_raw: GridSignal | SignalFunction,
    scaling: Scaling = "identity",
    *,
    window: tuple[float, float] | None = None,
    tol: float | None = None,
    output_grid: GridSpec | None = None,
) -> LowpassResult:
    """Project a raw signal onto the rescaled local bandlimit space.

    Args:
        ctx: Kernel context of a normalized pair.
        theta: Level of the lattice carrying the expansion.
        f_raw: Grid signal, or a vectorized callable.
        scaling: Target space; "identity" rescales by tau', a MobiusParam by
            (mu_w o tau)'. ``None`` uses the unscaled kernel.
        window: Integration window for callables; None integrates over the
            whole line. Grid signals always use their own window.
        tol: Relative convergence tolerance (``TVBAND_QUAD_TOL`` by default).
        output_grid: Where to evaluate the result for callable input.

    Raises:
        SingularParameterError: If theta is the exceptional level.
        AccuracyError: If refinement does not converge.
    """
    settings = get_settings()
    tol = settings.quad_tol if tol is None else tol
    order = settings.quad_points

    samples = sampling_sequence(ctx.pair, theta)
    if samples.exceptional:
        raise SingularParameterError(
            f"theta={theta!r} is exceptional; its kernels do not span the space",
        )

    lattice_points = np.concatenate([ctx.pair.nodes, samples.points])
    whole_line = False
    if isinstance(f_raw, GridSignal):
        lo, hi = signal_extent(f_raw)
        breaks = _breaks(lo, hi, lattice_points, f_raw.times())
    elif window is not None:
        lo, hi = window
        if not lo < hi:
            raise ParameterError(f"window must satisfy LO < HI, got {window}")
        breaks = _breaks(lo, hi, lattice_points)
    else:
        whole_line = True
        lo = float(lattice_points.min()) - TAIL_MARGIN
        hi = float(lattice_points.max()) + TAIL_MARGIN
        breaks = _breaks(lo, hi, lattice_points)

    integrand = _Integrand(ctx, f_raw, scaling)
    phi_n = features(ctx, samples.points)
    amplitude_n = np.sqrt(reparametrization_rate(ctx, samples.points, scaling))

    normalizers = np.einsum("ij,ij->i", phi_n, phi_n) * amplitude_n**2
    # Cauchy-Schwarz: |c_n| <= ||f|| sqrt(K(t_n, t_n))
    kernel_norm = float(np.sqrt(normalizers.max())) if normalizers.size else 0.0

    def coefficients_at(level: int) -> tuple[np.ndarray, float, int]:
        x, w = panel_rule(breaks, order, level)
        if whole_line:
            xl, wl = _mapped_tail(lo, -1.0, order, level)
            xr, wr = _mapped_tail(hi, 1.0, order, level)
            x = np.concatenate([xl, x, xr])
            w = np.concatenate([wl, w, wr])
        moments, energy = integrand.accumulate(x, w)
        return amplitude_n * (phi_n @ moments), math.sqrt(energy) * kernel_norm, int(x.size)

    previous, _, used = coefficients_at(0)
    change = math.inf
    for level in range(1, settings.quad_max_refinements + 1):
        current, bound, used = coefficients_at(level)
        change = float(np.max(np.abs(current - previous))) if current.size else 0.0
        # Relative to the larger of max abs(c_n) and its Cauchy-Schwarz bound.
        largest = float(np.max(np.abs(current))) if current.size else 0.0
        scale = max(largest, bound, 1e-300)
        previous = current
        if change <= tol * scale:
            refinements = level
            break
    else:
        logger.error(
            "Low-pass quadrature did not converge",
            operation="lowpass_project",
            status="error",
            theta=theta,
            change=change,
            tolerance=tol,
        )
        raise AccuracyError(
            f"coefficients changed by {change:.3e} (relative tolerance {tol:.1e}) "
            f"after {settings.quad_max_refinements} refinements",
        )

    tail = 0.0 if whole_line else _tail_estimate(ctx, f_raw, samples, scaling, (lo, hi))

    result = LowpassResult(
        ctx=ctx,
        samples=samples,
        scaling=scaling,
        coefficients=previous,
        normalizers=normalizers,
        tail_estimate=tail,
        refinements=refinements,
        quadrature_points=used,
        window=(lo, hi) if not whole_line else (-math.inf, math.inf),
    )
    grid = f_raw.spec if isinstance(f_raw, GridSignal) else output_grid
    if grid is not None:
        output = result.on_grid(grid)
        result = replace(result, output=output)

    logger.info(
        "Low-pass projection computed",
        operation="lowpass_project",
        status="success",
        theta=theta,
        coefficients=int(previous.size),
        refinements=refinements,
        quadrature_points=used,
        tail_estimate=tail,
    )
    return result


def _tail_estimate(
    ctx: KernelContext,
    f: GridSignal | SignalFunction,
    samples: SampleSet,
    scaling: Scaling,
    window: tuple[float, float],
) -> float:
    """Largest coefficient loss from the 1/(x - t_n) decay beyond each edge."""
    edges = np.asarray(window, dtype=np.float64)
    edge_values = np.abs(evaluate_signal(f, edges))
    kernels = np.abs(kernel_grid(ctx, edges, samples.points, scaling=scaling))
    distances = np.abs(edges[:, None] - samples.points[None, :])
    per_coefficient = np.sum(edge_values[:, None] * kernels * distances, axis=0)
    return float(per_coefficient.max()) if per_coefficient.size else 0.0
