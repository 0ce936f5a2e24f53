"""Characteristic function, Mobius maps and the time-varying bandlimit."""

from tvband.application.charfun.bandlimit import (
    BandlimitProfile,
    bandlimit_omega,
    bandlimit_profile,
    compute_w_star,
    inverse_x_coth_x,
)
from tvband.application.charfun.inner import (
    ClarkMeasure,
    clark_measure,
    exceptional_theta,
    herglotz_eval,
    model_kernel,
    multiplier_M,
    theta_eval,
    theta_eval_theta_form,
)
from tvband.application.charfun.mobius import (
    lambda_w,
    lambda_w_prime,
    mobius,
    mu_w,
    mu_w_prime,
)

__all__ = [
    "BandlimitProfile",
    "ClarkMeasure",
    "bandlimit_omega",
    "bandlimit_profile",
    "clark_measure",
    "compute_w_star",
    "exceptional_theta",
    "herglotz_eval",
    "inverse_x_coth_x",
    "lambda_w",
    "lambda_w_prime",
    "mobius",
    "model_kernel",
    "mu_w",
    "mu_w_prime",
    "multiplier_M",
    "theta_eval",
    "theta_eval_theta_form",
]
