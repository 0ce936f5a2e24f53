"""Scalar root finding: Brent on a bracket, bracket growth, guarded Newton."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import structlog
from scipy.optimize import brentq

from tvband.domain.errors import NumericDegeneracyError

if TYPE_CHECKING:
    from collections.abc import Callable

logger = structlog.get_logger(__name__)

MAX_EXPANSIONS = 200


@dataclass(frozen=True, slots=True)
class RootResult:
    """Outcome of a scalar solve.

    Attributes:
        root: Final estimate.
        converged: Whether the tolerance was met.
        iterations: Iterations used.
        function_calls: Function evaluations used.
    """

    root: float
    converged: bool
    iterations: int
    function_calls: int


def bracketed_root(
    f: Callable[[float], float],
    a: float,
    b: float,
    *,
    xtol: float = 1e-13,
    rtol: float = 4 * 2.220446049250313e-16,
    maxiter: int = 200,
) -> RootResult:
    """Brent's method on [a, b]; the endpoint values must differ in sign.

    An endpoint that is already an exact root is returned without iterating.

    Raises:
        NumericDegeneracyError: If the bracket is invalid or Brent does not
            converge.
    """
    fa = f(a)
    if fa == 0.0:
        return RootResult(a, True, 0, 1)
    fb = f(b)
    if fb == 0.0:
        return RootResult(b, True, 0, 2)
    if fa * fb > 0:
        raise NumericDegeneracyError(
            f"no sign change on [{a!r}, {b!r}]: f(a)={fa!r}, f(b)={fb!r}",
        )
    try:
        root, info = brentq(
            f,
            a,
            b,
            xtol=xtol,
            rtol=rtol,
            maxiter=maxiter,
            full_output=True,
            disp=False,
        )
    except (ValueError, RuntimeError) as e:
        raise NumericDegeneracyError(f"Brent iteration failed on [{a!r}, {b!r}]: {e}")
    if not info.converged:
        logger.warning(
            "Brent did not converge",
            operation="bracketed_root",
            status="error",
            a=a,
            b=b,
            flag=info.flag,
        )
        raise NumericDegeneracyError(f"Brent did not converge on [{a!r}, {b!r}]")
    return RootResult(float(root), True, info.iterations, info.function_calls + 2)


def expand_bracket(
    f: Callable[[float], float],
    anchor: float,
    step: float,
) -> float:
    """Walk away from ``anchor`` by doubling ``step`` until f changes sign.

    ``f(anchor)`` must be nonzero; ``step`` carries the direction.

    Returns:
        The far end of a bracket [anchor, end] (or [end, anchor]).
    """
    f_anchor = f(anchor)
    distance = step
    for _ in range(MAX_EXPANSIONS):
        end = anchor + distance
        if not math.isfinite(end):
            break
        if f(end) * f_anchor <= 0:
            return end
        distance *= 2.0
    raise NumericDegeneracyError(
        f"no sign change found moving from {anchor!r} in direction {math.copysign(1, step):+.0f}",
    )


def safeguarded_newton(
    f: Callable[[float], float],
    df: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    rtol: float = 1e-13,
    maxiter: int = 100,
) -> RootResult:
    """Newton's method that falls back to bisection when a step leaves [lo, hi].

    ``f`` must be increasing with f(lo) <= 0 <= f(hi).
    """
    x = 0.5 * (lo + hi)
    calls = 0
    for iteration in range(1, maxiter + 1):
        fx = f(x)
        calls += 1
        if fx == 0.0:
            return RootResult(x, True, iteration, calls)
        if fx < 0:
            lo = x
        else:
            hi = x
        slope = df(x)
        candidate = x - fx / slope if slope > 0 else math.nan
        if not (lo < candidate < hi):
            candidate = 0.5 * (lo + hi)
        if abs(candidate - x) <= rtol * max(abs(candidate), math.ulp(1.0)):
            return RootResult(candidate, True, iteration, calls)
        x = candidate
    return RootResult(x, False, maxiter, calls)
