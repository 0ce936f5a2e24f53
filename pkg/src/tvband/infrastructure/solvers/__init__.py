"""Numerical solvers wrapped with tvband errors and logging."""

from tvband.infrastructure.solvers.eigen import EigenResult, jacobi_eigh
from tvband.infrastructure.solvers.ode import integrate
from tvband.infrastructure.solvers.quadrature import gauss_legendre_rule, panel_rule
from tvband.infrastructure.solvers.roots import (
    RootResult,
    bracketed_root,
    expand_bracket,
    safeguarded_newton,
)

__all__ = [
    "EigenResult",
    "RootResult",
    "bracketed_root",
    "expand_bracket",
    "gauss_legendre_rule",
    "integrate",
    "jacobi_eigh",
    "panel_rule",
    "safeguarded_newton",
]
