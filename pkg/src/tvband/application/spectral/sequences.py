"""Sampling sequences t_n(theta) and the spectral function t(s).

For every level theta the equation tau(t) = n + theta has exactly one root in
each node gap (t_n, t_{n+1}); at most one further root lies beyond the first or
last node. Which tail carries it depends on theta relative to the exceptional
level theta*; at theta = theta* there is no tail root.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np
import structlog

from tvband.application.core.lattice import Lattice
from tvband.application.spectral.phase import pair_lattice
from tvband.domain.errors import OutOfWindowError, ParameterError, SingularParameterError
from tvband.domain.models import BandlimitPair, SampleSet
from tvband.domain.types import EXCEPTIONAL_THETA_TOL
from tvband.infrastructure.config.settings import get_settings
from tvband.infrastructure.solvers.roots import bracketed_root, expand_bracket
from tvband.shared.parallel import parallel_map

if TYPE_CHECKING:
    from collections.abc import Sequence

logger = structlog.get_logger(__name__)

FULL_LINE = (-math.inf, math.inf)


def _check_theta(theta: float, name: str = "theta") -> None:
    if not (0.0 <= theta < 1.0):
        raise ParameterError(f"{name} must lie in [0, 1), got {theta!r}")


def spectral_domain(lattice: Lattice, pair: BandlimitPair) -> tuple[float, float]:
    """Open interval (a, b) on which t(s) is finite."""
    theta_star = lattice.theta_star()
    return pair.indices.lo - 1 + theta_star, pair.indices.hi + theta_star


def _tail_step(lattice: Lattice) -> float:
    if lattice.size > 1:
        return max(1.0, float(lattice.points[-1] - lattice.points[0]) / lattice.size)
    return 1.0


def _solve_level(lattice: Lattice, pair: BandlimitPair, k: int, theta: float) -> float:
    """Root of tau(t) = k + theta; k is a spectral index in [lo - 1, hi]."""
    lo = pair.indices.lo
    hi = pair.indices.hi
    target = k + theta

    def residual(t: float) -> float:
        return lattice.phase(t) - target

    xtol = get_settings().root_xtol
    if lo <= k < hi:
        a = float(lattice.points[k - lo])
        b = float(lattice.points[k - lo + 1])
    elif k == hi:
        a = float(lattice.points[-1])
        b = expand_bracket(residual, a, _tail_step(lattice))
    elif k == lo - 1:
        b = float(lattice.points[0])
        a = expand_bracket(residual, b, -_tail_step(lattice))
    else:
        raise ParameterError(f"spectral index {k} outside [{lo - 1}, {hi}]")
    return bracketed_root(residual, a, b, xtol=xtol).root


def sampling_sequence(
    pair: BandlimitPair,
    theta: float,
    window: tuple[float, float] = FULL_LINE,
) -> SampleSet:
    """Solutions of tau(t) = n + theta inside ``window`` with weights 1/tau'.

    Only node gaps that meet the window are solved. At theta = 0 the nodes and
    weights are returned as given.

    Raises:
        ParameterError: If theta is outside [0, 1) or the window is reversed.
        NotNormalizedError: If the pair is not normalized.
    """
    _check_theta(theta)
    w_lo, w_hi = window
    if not w_lo <= w_hi:
        raise ParameterError(f"window must satisfy LO <= HI, got {window}")

    lattice = pair_lattice(pair)
    theta_star = lattice.theta_star()
    exceptional = abs(theta - theta_star) < EXCEPTIONAL_THETA_TOL
    nodes = pair.nodes
    labels = pair.labels

    if theta == 0.0:
        inside = (nodes >= w_lo) & (nodes <= w_hi)
        return SampleSet(
            theta=0.0,
            points=nodes[inside],
            weights=pair.weights[inside],
            labels=labels[inside],
            source_pair=pair,
            window=window,
        )

    lo = pair.indices.lo
    hi = pair.indices.hi
    first_gap = max(0, int(np.searchsorted(nodes, w_lo, side="right")) - 1)
    last_gap = min(pair.size - 2, int(np.searchsorted(nodes, w_hi, side="left")) - 1)
    levels = list(range(lo + first_gap, lo + last_gap + 1))
    if not exceptional:
        if theta > theta_star and w_lo < nodes[0]:
            levels.insert(0, lo - 1)
        if theta < theta_star and w_hi > nodes[-1]:
            levels.append(hi)

    points = np.array(
        parallel_map(lambda k: _solve_level(lattice, pair, k, theta), levels),
        dtype=np.float64,
    )
    level_labels = np.asarray(levels, dtype=np.int64)
    inside = (points >= w_lo) & (points <= w_hi)
    points = points[inside]
    level_labels = level_labels[inside]
    weights = 1.0 / lattice.rate_many(points) if points.size else np.empty(0)

    logger.info(
        "Sampling sequence computed",
        operation="sampling_sequence",
        status="success",
        theta=theta,
        points=int(points.size),
        exceptional=exceptional,
    )
    return SampleSet(
        theta=theta,
        points=points,
        weights=weights,
        labels=level_labels,
        source_pair=pair,
        exceptional=exceptional,
        window=window,
    )


def sampling_sequences(
    pair: BandlimitPair,
    thetas: Sequence[float],
    window: tuple[float, float] = FULL_LINE,
) -> list[SampleSet]:
    return [sampling_sequence(pair, theta, window) for theta in thetas]


def lattice_for(pair: BandlimitPair, theta: float) -> Lattice:
    """Lattice of the theta sampling sequence over the whole line.

    Raises:
        SingularParameterError: If theta is the exceptional level.
    """
    _check_theta(theta)
    base = pair_lattice(pair)
    if theta == 0.0:
        return base
    samples = sampling_sequence(pair, theta)
    if samples.exceptional:
        raise SingularParameterError(
            f"theta={theta!r} is the exceptional level; its lattice is incomplete",
        )
    return Lattice.of_samples(samples, base.mass)


def spectral_value(pair: BandlimitPair, s: float) -> float:
    """Spectral function t(s), the inverse of tau; t(n + theta) = t_n(theta).

    Raises:
        OutOfWindowError: If s lies outside the domain (a, b).
    """
    lattice = pair_lattice(pair)
    a, b = spectral_domain(lattice, pair)
    if not a < s < b:
        raise OutOfWindowError(f"s={s!r} outside the spectral domain ({a!r}, {b!r})", [s])
    k = math.floor(s)
    theta = s - k
    if theta == 0.0 and pair.indices.lo <= k <= pair.indices.hi:
        return float(pair.nodes[k - pair.indices.lo])
    return _solve_level(lattice, pair, k, theta)
