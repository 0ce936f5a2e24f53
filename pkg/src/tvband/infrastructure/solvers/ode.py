"""Scalar ODE integration with scipy's embedded Runge-Kutta pairs."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
import structlog
from scipy.integrate import solve_ivp

from tvband.domain.errors import StiffnessError

if TYPE_CHECKING:
    from collections.abc import Callable

    from tvband.domain.types import FloatArray

logger = structlog.get_logger(__name__)

MIN_STEP = 1e-12
DEFAULT_METHOD = "DOP853"
ATOL_FLOOR = 1e-13


def integrate(
    rhs: Callable[[float, float], float],
    s_start: float,
    s_end: float,
    y_start: float,
    s_eval: FloatArray,
    *,
    rtol: float = 1e-11,
    atol: float = ATOL_FLOOR,
    method: str = DEFAULT_METHOD,
) -> tuple[FloatArray, float]:
    """Integrate dy/ds = rhs(s, y) from s_start to s_end.

    Integration may run backwards (s_end < s_start). The default method is
    the 8(5,3) pair; ``"RK45"`` is accepted for comparison runs.

    Returns:
        Values at ``s_eval`` (which must lie between the endpoints) and the
        value at ``s_end``.

    Raises:
        StiffnessError: If the step size collapses or the solver stops early.
    """
    if s_end == s_start:
        return np.full(np.shape(s_eval), y_start, dtype=np.float64), y_start

    solution = solve_ivp(
        lambda s, y: [rhs(s, float(y[0]))],
        (s_start, s_end),
        [y_start],
        method=method,
        rtol=rtol,
        atol=atol,
        dense_output=True,
    )
    if solution.status != 0:
        location = float(solution.t[-1])
        logger.error(
            "Spectral ODE integration failed",
            operation="integrate",
            status="error",
            s=location,
            message=solution.message,
        )
        raise StiffnessError(f"integration stopped: {solution.message}", location)

    # The final step is clipped to s_end and may be arbitrarily short
    interior = np.abs(np.diff(solution.t))[:-1]
    if interior.size and float(interior.min()) < MIN_STEP:
        location = float(solution.t[int(np.argmin(interior)) + 1])
        raise StiffnessError("step size collapsed below 1e-12", location)

    values = (
        solution.sol(np.asarray(s_eval, dtype=np.float64))[0]
        if np.size(s_eval)
        else np.empty(0)
    )
    return np.asarray(values, dtype=np.float64), float(solution.y[0, -1])
