"""Reproducing kernel K(t, s) of the local bandlimit space and its rescalings.

K(t, s) = phi(t) . phi(s) with unit feature vectors built on the alpha
lattice, so Gram matrices are products of feature matrices.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING, Literal

import numpy as np
import structlog

from tvband.application.charfun.mobius import mu_w_prime
from tvband.application.kernel.context import KernelContext
from tvband.application.spectral.sequences import sampling_sequence
from tvband.domain.errors import SingularParameterError
from tvband.domain.models import MobiusParam
from tvband.shared.summation import fdot

if TYPE_CHECKING:
    import numpy.typing as npt

    from tvband.domain.models import SampleSet
    from tvband.domain.types import FloatArray

logger = structlog.get_logger(__name__)

# None: unscaled kernel; "identity": scaled by tau'; MobiusParam: scaled by (mu_w o tau)'
Scaling = MobiusParam | Literal["identity"] | None


def f_alpha(ctx: KernelContext, t: float) -> float:
    """(sum_k t'(k+alpha) / (t - t_k(alpha))^2)^(-1/2); zero on the alpha lattice."""
    return math.sqrt(ctx.lattice.f_squared(t))


def features(ctx: KernelContext, ts: npt.ArrayLike) -> FloatArray:
    return ctx.lattice.features(ts, ctx.near_node_epsilon)


def kernel_eval(ctx: KernelContext, t: float, s: float) -> float:
    """K(t, s); symmetric in its arguments and equal to 1 on the diagonal."""
    phi = features(ctx, [t, s])
    return fdot(phi[0], phi[1])


def reparametrization_rate(
    ctx: KernelContext,
    ts: npt.ArrayLike,
    scaling: Scaling,
) -> FloatArray:
    """(mu o tau)'(t) for the chosen scaling; ones when unscaled."""
    ts = np.atleast_1d(np.asarray(ts, dtype=np.float64))
    if scaling is None:
        return np.ones_like(ts)
    rate = ctx.phase_lattice.rate_many(ts)
    if scaling == "identity":
        return rate
    tau = ctx.phase_lattice.phase_many(ts)
    return np.asarray(mu_w_prime(scaling, tau)) * rate


def scaled_kernel(
    ctx: KernelContext,
    mu_param: MobiusParam | None,
    t: float,
    s: float,
) -> float:
    """sqrt((mu o tau)'(t)) K(t, s) sqrt((mu o tau)'(s)); ``None`` means mu = id."""
    scaling: Scaling = "identity" if mu_param is None else mu_param
    rates = reparametrization_rate(ctx, [t, s], scaling)
    return math.sqrt(rates[0] * rates[1]) * kernel_eval(ctx, t, s)


def kernel_grid(
    ctx: KernelContext,
    ts: npt.ArrayLike,
    ss: npt.ArrayLike,
    *,
    scaling: Scaling = None,
) -> FloatArray:
    """Kernel matrix [K(t_i, s_j)] (rescaled when ``scaling`` is given)."""
    ts = np.atleast_1d(np.asarray(ts, dtype=np.float64))
    ss = np.atleast_1d(np.asarray(ss, dtype=np.float64))
    values = features(ctx, ts) @ features(ctx, ss).T
    if scaling is not None:
        left = np.sqrt(reparametrization_rate(ctx, ts, scaling))
        right = np.sqrt(reparametrization_rate(ctx, ss, scaling))
        values = left[:, None] * values * right[None, :]
    logger.debug(
        "Kernel grid evaluated",
        operation="kernel_grid",
        status="success",
        shape=list(values.shape),
    )
    return values


def _complete_sequence(ctx: KernelContext, theta: float) -> SampleSet:
    samples = sampling_sequence(ctx.pair, theta)
    if samples.exceptional:
        raise SingularParameterError(f"theta={theta!r} is the exceptional level")
    return samples


def cross_gram(ctx: KernelContext, theta: float, beta: float) -> FloatArray:
    """Inner products <phi_n(theta), phi_m(beta)> = K(t_n(theta), t_m(beta))."""
    rows = _complete_sequence(ctx, theta)
    cols = _complete_sequence(ctx, beta)
    return kernel_grid(ctx, rows.points, cols.points)


def cross_gram_closed_form(rows: SampleSet, cols: SampleSet) -> FloatArray:
    """(-1)^(n+m) sin(pi(beta - theta)) sqrt(t'_n t'_m) / (pi (t_m(beta) - t_n(theta))).

    Valid for distinct levels theta != beta.
    """
    if rows.theta == cols.theta:
        raise SingularParameterError("closed-form cross Gram needs distinct levels")
    signs = np.where((rows.labels[:, None] + cols.labels[None, :]) % 2 == 0, 1.0, -1.0)
    gaps = cols.points[None, :] - rows.points[:, None]
    amplitude = np.sqrt(rows.weights[:, None] * cols.weights[None, :])
    sine = math.sin(math.pi * (cols.theta - rows.theta))
    return signs * sine * amplitude / (math.pi * gaps)
