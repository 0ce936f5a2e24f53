"""Characteristic function Theta, Herglotz function, model kernel, multiplier."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
import structlog

from tvband.application.core.lattice import Lattice
from tvband.application.spectral.phase import pair_lattice
from tvband.application.spectral.sequences import sampling_sequence
from tvband.domain.errors import PoleError, SingularParameterError
from tvband.domain.models import BandlimitPair
from tvband.domain.types import FloatArray

logger = structlog.get_logger(__name__)


def theta_eval(pair: BandlimitPair, z: complex) -> complex:
    """Theta(z) = (G(z) - iP) / (G(z) + iP) for the Cauchy sum G of the pair.

    Nodes are removable: Theta(t_n) = 1.

    Raises:
        NotNormalizedError: If the pair is not normalized.
        NumericDegeneracyError: If the denominator vanishes.
    """
    return pair_lattice(pair).inner_ratio(complex(z))


def theta_eval_theta_form(pair: BandlimitPair, theta: float, z: complex) -> complex:
    """Theta(z) rebuilt from the theta sampling sequence and its weights.

    Raises:
        SingularParameterError: At the exceptional level, whose atoms miss the
            point at infinity.
    """
    base = pair_lattice(pair)
    samples = sampling_sequence(pair, theta)
    if samples.exceptional:
        raise SingularParameterError(
            f"theta={theta!r} is exceptional; its sampling sequence is incomplete",
        )
    lattice = Lattice.of_samples(samples, base.mass)
    return cmath.exp(2j * math.pi * theta) * lattice.inner_ratio(complex(z))


def herglotz_eval(pair: BandlimitPair, z: complex) -> complex:
    """H(z) = (1 + Theta(z)) / (1 - Theta(z)) = -i G(z) / P.

    Raises:
        PoleError: If z is a node, where Theta(z) = 1.
    """
    lattice = pair_lattice(pair)
    value = -1j * lattice.cauchy_transform(complex(z)) / lattice.mass
    if not cmath.isfinite(value):
        raise PoleError(f"Herglotz function is singular at z={z}")
    return value


def model_kernel(pair: BandlimitPair, z: complex, w: complex) -> complex:
    """k(z, w) = (i / 2 pi) (1 - Theta(z) conj(Theta(w))) / (z - conj(w)).

    On the real diagonal the limit tau'(t) is returned.
    """
    lattice = pair_lattice(pair)
    z = complex(z)
    w = complex(w)
    gap = z - w.conjugate()
    if gap == 0:
        if z.imag != 0.0:
            raise PoleError(f"model kernel is singular at z = conj(w) = {z}")
        return complex(lattice.rate(z.real))
    numerator = 1.0 - lattice.inner_ratio(z) * lattice.inner_ratio(w).conjugate()
    return 1j / (2.0 * math.pi) * numerator / gap


def multiplier_M(pair: BandlimitPair, t: float) -> complex:  # noqa: N802
    """M(t) = 2 pi (1 - Theta(t))^-1 (-1)^floor(tau(t)) f(t); finite at nodes."""
    return pair_lattice(pair).multiplier(t)


def exceptional_theta(pair: BandlimitPair) -> float:
    """Level theta* in (0, 1) whose sampling sequence loses a point to infinity."""
    return pair_lattice(pair).theta_star()


@dataclass(frozen=True, slots=True, eq=False)
class ClarkMeasure:
    """Atomic measure of Theta exp(-2 pi i theta).

    ``masses`` are t'_n(theta)/pi; ``probabilities`` divide further by
    1 + t_n(theta)^2 and sum to one unless the level is exceptional.
    """

    theta: float
    atoms: FloatArray
    masses: FloatArray
    probabilities: FloatArray
    exceptional: bool

    @property
    def total_probability(self) -> float:
        return math.fsum(self.probabilities.tolist())


def clark_measure(pair: BandlimitPair, theta: float) -> ClarkMeasure:
    samples = sampling_sequence(pair, theta)
    masses = samples.weights / math.pi
    probabilities = masses / (1.0 + samples.points**2)
    measure = ClarkMeasure(
        theta=theta,
        atoms=samples.points,
        masses=masses,
        probabilities=np.asarray(probabilities),
        exceptional=samples.exceptional,
    )
    logger.info(
        "Clark measure built",
        operation="clark_measure",
        status="success",
        theta=theta,
        atoms=int(samples.size),
        total_probability=measure.total_probability,
    )
    return measure
