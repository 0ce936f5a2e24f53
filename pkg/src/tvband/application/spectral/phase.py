"""Phase function tau and the two right-hand sides of the spectral ODE."""

from __future__ import annotations

import math

from tvband.application.core.lattice import Lattice
from tvband.application.core.pairs import require_normalized
from tvband.domain.errors import SingularParameterError
from tvband.domain.models import BandlimitPair


def pair_lattice(pair: BandlimitPair) -> Lattice:
    """Offset-0 lattice of a normalized pair.

    Raises:
        NotNormalizedError: If the pair is not normalized.
    """
    return Lattice.of_pair(pair, require_normalized(pair))


def phase_tau(pair: BandlimitPair, t: float) -> float:
    """Phase tau(t) with Theta(t) = exp(2 pi i tau(t)) and tau(t_n) = n.

    Example:
        >>> from tvband.application.core.pairs import paley_wiener_pair
        >>> phase_tau(paley_wiener_pair(math.pi, 3), 2.0)
        2.0
    """
    return pair_lattice(pair).phase(t)


def tau_prime(pair: BandlimitPair, t: float) -> float:
    """Derivative tau'(t); equals 1/t'_n at the node t_n."""
    return pair_lattice(pair).rate(t)


def spectral_rate(pair: BandlimitPair, t: float) -> float:
    """dt/ds at the point t = t(s), the reciprocal of tau'(t)."""
    return 1.0 / tau_prime(pair, t)


def fractional_part(s: float) -> float:
    return s - math.floor(s)


def spectral_rate_sine_form(pair: BandlimitPair, s: float, t: float) -> float:
    """dt/ds at t = t(s) from the sine form pi^2 f_0(t)^2 / sin^2(pi [s]).

    Raises:
        SingularParameterError: If s is an integer.
    """
    sine = math.sin(math.pi * fractional_part(s))
    if sine == 0.0:
        raise SingularParameterError(f"sine form is singular at integer s={s!r}")
    return math.pi**2 * pair_lattice(pair).f_squared(t) / sine**2
