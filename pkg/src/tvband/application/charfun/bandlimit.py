"""Canonical Mobius parameter w* and the time-varying bandlimit omega(t).

With y = pi tau'(0) and f the inverse of g(x) = x coth(x), the canonical
parameter is w* = (y - f(y)) / (y + f(y)). The bandlimit is
omega(t) = pi (mu_{-w*} o tau)'(t), which reduces to the constant A on
Paley-Wiener spaces of bandwidth A.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
import structlog

from tvband.application.charfun.mobius import lambda_w_prime
from tvband.application.spectral.phase import pair_lattice
from tvband.domain.errors import AccuracyError, NotNormalizedError, NumericDegeneracyError
from tvband.domain.models import BandlimitPair, MobiusParam
from tvband.domain.types import NORMALIZATION_TOL
from tvband.infrastructure.solvers.roots import safeguarded_newton

if TYPE_CHECKING:
    import numpy.typing as npt

    from tvband.domain.types import FloatArray

logger = structlog.get_logger(__name__)

DEGENERATE_MARGIN = 1e-9
SERIES_CUTOFF = 1e-4


def x_coth_x(x: float) -> float:
    if abs(x) < SERIES_CUTOFF:
        return 1.0 + x * x / 3.0
    return x / math.tanh(x)


def _x_coth_x_prime(x: float) -> float:
    if abs(x) < SERIES_CUTOFF:
        return 2.0 * x / 3.0
    return 1.0 / math.tanh(x) - x / math.sinh(x) ** 2


def inverse_x_coth_x(y: float) -> float:
    """Solve x coth(x) = y for x >= 0 (y > 1)."""
    result = safeguarded_newton(lambda x: x_coth_x(x) - y, _x_coth_x_prime, 0.0, y)
    if not result.converged:
        raise AccuracyError(f"x coth x = {y!r} did not converge")
    return result.root


def w_star_from_rate(rate_at_zero: float) -> float:
    y = math.pi * rate_at_zero
    if y < 1.0 - NORMALIZATION_TOL:
        raise NotNormalizedError(
            f"pi tau'(0) = {y!r} is below 1; the pair is not normalized",
        )
    if y <= 1.0 + DEGENERATE_MARGIN:
        raise NumericDegeneracyError(
            f"pi tau'(0) = {y!r} is too close to 1 for w* to lie inside the disk",
        )
    f = inverse_x_coth_x(y)
    return (y - f) / (y + f)


def compute_w_star(pair: BandlimitPair) -> float:
    """Canonical Mobius parameter of a normalized pair, in (0, 1).

    Example:
        >>> from tvband.application.core.pairs import paley_wiener_pair
        >>> round(compute_w_star(paley_wiener_pair(1.0, 4000)), 3)
        0.135
    """
    w = w_star_from_rate(pair_lattice(pair).rate(0.0))
    logger.info(
        "Canonical Mobius parameter computed",
        operation="compute_w_star",
        status="success",
        w_star=w,
    )
    return w


@dataclass(frozen=True, slots=True, eq=False)
class BandlimitProfile:
    """tau, tau' and omega on a set of times."""

    times: FloatArray
    tau: FloatArray
    tau_prime: FloatArray
    omega: FloatArray
    w_star: float


def omega_from_phase(
    tau: npt.ArrayLike,
    tau_prime: npt.ArrayLike,
    w_star: float,
) -> float | np.ndarray:
    return np.pi * np.asarray(tau_prime) * lambda_w_prime(MobiusParam(-w_star), tau)


def bandlimit_omega(pair: BandlimitPair, t: float) -> float:
    """omega(t) = pi tau'(t) (1 - w*^2) / |exp(2 pi i tau(t)) + w*|^2 > 0."""
    lattice = pair_lattice(pair)
    w = w_star_from_rate(lattice.rate(0.0))
    return float(omega_from_phase(lattice.phase(t), lattice.rate(t), w))


def bandlimit_profile(pair: BandlimitPair, times: npt.ArrayLike) -> BandlimitProfile:
    lattice = pair_lattice(pair)
    w = w_star_from_rate(lattice.rate(0.0))
    ts = np.atleast_1d(np.asarray(times, dtype=np.float64))
    tau = lattice.phase_many(ts)
    rate = lattice.rate_many(ts)
    omega = np.asarray(omega_from_phase(tau, rate, w))
    return BandlimitProfile(ts, tau, rate, omega, w)
