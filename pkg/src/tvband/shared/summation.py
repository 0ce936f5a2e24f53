"""Correctly rounded sums for series that mix magnitudes."""

import math
from collections.abc import Iterable

import numpy as np
import numpy.typing as npt


def fsum(values: npt.ArrayLike | Iterable[float]) -> float:
    """Correctly rounded sum of real values."""
    return math.fsum(np.asarray(values, dtype=np.float64).ravel().tolist())


def complex_fsum(values: npt.ArrayLike) -> complex:
    """Correctly rounded sum of complex values, component by component."""
    array = np.asarray(values, dtype=np.complex128).ravel()
    return complex(fsum(array.real), fsum(array.imag))


def fdot(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    """Dot product with a correctly rounded final summation."""
    return fsum(np.multiply(a, b))
