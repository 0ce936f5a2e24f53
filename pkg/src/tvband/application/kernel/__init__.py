"""Local bandlimit kernel, its rescalings and the Paley-Wiener oracle."""

from tvband.application.kernel.context import KernelContext
from tvband.application.kernel.evaluate import (
    Scaling,
    cross_gram,
    cross_gram_closed_form,
    f_alpha,
    features,
    kernel_eval,
    kernel_grid,
    reparametrization_rate,
    scaled_kernel,
)
from tvband.application.kernel.paley_wiener import (
    ConvergenceRow,
    pw_convergence_table,
    pw_kernel_oracle,
)

__all__ = [
    "ConvergenceRow",
    "KernelContext",
    "Scaling",
    "cross_gram",
    "cross_gram_closed_form",
    "f_alpha",
    "features",
    "kernel_eval",
    "kernel_grid",
    "pw_convergence_table",
    "pw_kernel_oracle",
    "reparametrization_rate",
    "scaled_kernel",
]
