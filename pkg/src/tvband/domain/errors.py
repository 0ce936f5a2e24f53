"""Exception hierarchy.

Input problems subclass ``ValueError`` and map to CLI exit code 2; numeric
failures subclass ``RuntimeError`` and map to exit code 3.
"""

from __future__ import annotations

from collections.abc import Sequence

EXIT_VALIDATION = 2
EXIT_NUMERIC = 3


class TvbandError(Exception):
    exit_code: int = 1


class InputError(TvbandError, ValueError):
    """Invalid user input: pairs, parameters, windows, sizes."""

    exit_code = EXIT_VALIDATION


class InvalidPairError(InputError):
    """The bandlimit pair violates an invariant or cannot be normalized."""


class NotNormalizedError(InputError):
    """An operation that needs sum t'/(1+t^2) = pi received a raw pair."""


class ParameterError(InputError):
    """A scalar parameter is outside its admissible range."""


class OutOfWindowError(InputError):
    """Requested points fall outside the window a signal is defined on."""

    def __init__(self, message: str, points: Sequence[float] = ()) -> None:
        super().__init__(message)
        self.points = tuple(float(p) for p in points)


class DimensionBudgetError(InputError):
    """The dense matrix model would exceed the configured dimension."""


class NumericError(TvbandError, RuntimeError):
    exit_code = EXIT_NUMERIC


class NumericDegeneracyError(NumericError):
    """A denominator or discriminant vanished to working precision."""


class PoleError(NumericError):
    """Evaluation requested exactly at a pole."""


class StiffnessError(NumericError):
    """The ODE step size collapsed."""

    def __init__(self, message: str, s: float) -> None:
        super().__init__(f"{message} (s={s:.17g})")
        self.s = s


class SingularParameterError(NumericError):
    """The parameter hits a singular configuration (integer s, alpha == theta,
    exceptional theta lattice)."""


class AccuracyError(NumericError):
    """Adaptive refinement did not reach the requested tolerance."""
