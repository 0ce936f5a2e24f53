"""Residual checks of closed-form identities satisfied by t(s)."""

from __future__ import annotations

import math

from tvband.application.spectral.ode import solve_spectral_ode
from tvband.application.spectral.phase import fractional_part, pair_lattice
from tvband.application.spectral.sequences import lattice_for, spectral_value
from tvband.domain.errors import NumericDegeneracyError, SingularParameterError
from tvband.domain.models import BandlimitPair


def functional_equation_residual(
    pair: BandlimitPair,
    s: float,
    *,
    rtol: float | None = None,
) -> float:
    """Relative residual of sin(pi [s])^2 (G(t)^2 + P^2) = pi^2 at t = t(s).

    t(s) is taken from the spectral ODE so the residual measures integration
    error; the identity itself is exact.

    Raises:
        SingularParameterError: If s is an integer.
    """
    sine = math.sin(math.pi * fractional_part(s))
    if sine == 0.0:
        raise SingularParameterError(f"functional equation is singular at integer s={s!r}")
    table = solve_spectral_ode(pair, (s, s), rtol=rtol, s_grid=[s])
    t = float(table.t_values[0])

    lattice = pair_lattice(pair)
    j, d, r, _ = lattice.local_sums(t)
    if d == 0.0:
        raise NumericDegeneracyError(f"t(s)={t!r} landed on a node for s={s!r}")
    w_j = float(lattice.weights[j])
    # d^2 (G^2 + P^2), with G = -w_j/d + R
    scaled = (w_j - r * d) ** 2 + (lattice.mass * d) ** 2
    return abs(1.0 - math.pi**2 * d * d / (sine * sine * scaled))


def spectral_derivative_form2(
    pair: BandlimitPair,
    alpha: float,
    theta: float,
    n: int,
) -> float:
    """t'(n + theta) from the alpha lattice: pi^2 f_alpha(t_n(theta))^2 / sin^2(pi(alpha - theta)).

    Raises:
        SingularParameterError: If alpha equals theta or alpha is exceptional.
    """
    sine = math.sin(math.pi * (alpha - theta))
    if alpha == theta or sine == 0.0:
        raise SingularParameterError(f"alpha and theta must differ, both are {alpha!r}")
    lattice = lattice_for(pair, alpha)
    t = spectral_value(pair, n + theta)
    return math.pi**2 * lattice.f_squared(t) / sine**2
