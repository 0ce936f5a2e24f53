"""Disk automorphisms and the analytic parametrizations of the unit interval."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from tvband.domain.errors import PoleError
from tvband.domain.models import MobiusParam

if TYPE_CHECKING:
    import numpy.typing as npt

TWO_PI = 2.0 * np.pi


def _param(w: MobiusParam | complex) -> complex:
    return w.w if isinstance(w, MobiusParam) else MobiusParam(complex(w)).w


def _out(value: np.ndarray, like: npt.ArrayLike) -> float | np.ndarray:
    return float(value) if np.ndim(like) == 0 else value


def mobius(w: MobiusParam | complex, z: complex) -> complex:
    """F_w(z) = (z - w) / (1 - z conj(w)).

    Example:
        >>> mobius(0.5, 0.5)
        0j
    """
    w = _param(w)
    denominator = 1.0 - z * w.conjugate()
    if denominator == 0:
        raise PoleError(f"F_w has a pole at z={z} for w={w}")
    return (z - w) / denominator


def lambda_w(w: MobiusParam | complex, t: npt.ArrayLike) -> float | np.ndarray:
    """Continuous increasing lift of t -> F_w(exp(2 pi i t)) with lambda_w(0) in [0, 1).

    Uses exp(2 pi i lambda) = exp(2 pi i t) (1 - w e^{-2 pi i t}) / (1 - conj(w) e^{2 pi i t});
    both factors have positive real part, so their principal arguments are
    continuous in t.
    """
    w = _param(w)
    ts = np.asarray(t, dtype=np.float64)
    carrier = np.exp(1j * TWO_PI * ts)
    shift = (np.angle(1.0 - w / carrier) - np.angle(1.0 - w.conjugate() * carrier)) / TWO_PI
    at_zero = (np.angle(1.0 - w) - np.angle(1.0 - w.conjugate())) / TWO_PI
    branch = 0.0 if at_zero >= 0.0 else 1.0
    return _out(ts + shift + branch, t)


def lambda_w_prime(w: MobiusParam | complex, t: npt.ArrayLike) -> float | np.ndarray:
    """(1 - |w|^2) / |exp(2 pi i t) - w|^2."""
    w = _param(w)
    ts = np.asarray(t, dtype=np.float64)
    value = (1.0 - abs(w) ** 2) / np.abs(np.exp(1j * TWO_PI * ts) - w) ** 2
    return _out(value, t)


def mu_w(w: MobiusParam | complex, t: npt.ArrayLike) -> float | np.ndarray:
    """lambda_w(t) - lambda_w(0), the smooth parametrization with mu_w(0) = 0."""
    offset = lambda_w(w, 0.0)
    return _out(np.asarray(lambda_w(w, t)) - offset, t)


def mu_w_prime(w: MobiusParam | complex, t: npt.ArrayLike) -> float | np.ndarray:
    return lambda_w_prime(w, t)
