"""Phase function, spectral function and sampling sequences."""

from tvband.application.spectral.identities import (
    functional_equation_residual,
    spectral_derivative_form2,
)
from tvband.application.spectral.ode import solve_spectral_ode
from tvband.application.spectral.phase import (
    pair_lattice,
    phase_tau,
    spectral_rate,
    spectral_rate_sine_form,
    tau_prime,
)
from tvband.application.spectral.sequences import (
    FULL_LINE,
    lattice_for,
    sampling_sequence,
    sampling_sequences,
    spectral_domain,
    spectral_value,
)

__all__ = [
    "FULL_LINE",
    "functional_equation_residual",
    "lattice_for",
    "pair_lattice",
    "phase_tau",
    "sampling_sequence",
    "sampling_sequences",
    "solve_spectral_ode",
    "spectral_derivative_form2",
    "spectral_domain",
    "spectral_rate",
    "spectral_rate_sine_form",
    "spectral_value",
    "tau_prime",
]
