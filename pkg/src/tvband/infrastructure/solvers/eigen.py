"""Cyclic Jacobi eigensolver for small dense Hermitian matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
import structlog

from tvband.domain.errors import NumericDegeneracyError

if TYPE_CHECKING:
    import numpy.typing as npt

    from tvband.domain.types import ComplexArray, FloatArray

logger = structlog.get_logger(__name__)

MAX_SWEEPS = 60


@dataclass(frozen=True, slots=True)
class EigenResult:
    """Eigenvalues in ascending order with unit eigenvectors as columns."""

    values: FloatArray
    vectors: ComplexArray
    sweeps: int
    off_diagonal: float


def _off_norm(a: ComplexArray) -> float:
    """Frobenius norm of the off-diagonal part, summed entry by entry."""
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotate(a: ComplexArray, v: ComplexArray, p: int, q: int) -> None:
    """Annihilate a[p, q] in place with a complex plane rotation."""
    a_pq = a[p, q]
    magnitude = abs(a_pq)
    phase = a_pq / magnitude
    tau = (a[q, q].real - a[p, p].real) / (2.0 * magnitude)
    t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c
    conj_phase = phase.conjugate()
    rotation = np.array([[c, s], [-s * conj_phase, c * conj_phase]], dtype=np.complex128)

    cols = [p, q]
    a[:, cols] = a[:, cols] @ rotation
    a[cols, :] = rotation.conj().T @ a[cols, :]
    v[:, cols] = v[:, cols] @ rotation
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real


def jacobi_eigh(matrix: npt.ArrayLike, tol: float = 1e-13) -> EigenResult:
    """Diagonalize a Hermitian matrix by cyclic Jacobi sweeps.

    Iterates until the off-diagonal Frobenius norm drops below
    ``tol * ||A||_F``.

    Raises:
        NumericDegeneracyError: If the sweeps stop converging.
    """
    a = np.array(matrix, dtype=np.complex128, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NumericDegeneracyError(f"expected a square matrix, got shape {a.shape}")
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    threshold = tol * max(float(np.linalg.norm(a)), np.finfo(np.float64).tiny)

    sweeps = 0
    off = _off_norm(a)
    while off > threshold:
        if sweeps >= MAX_SWEEPS:
            logger.error(
                "Jacobi sweeps did not converge",
                operation="jacobi_eigh",
                status="error",
                dimension=n,
                off_diagonal=off,
            )
            raise NumericDegeneracyError(
                f"Jacobi did not converge after {sweeps} sweeps (off={off:.3e})",
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > 0.0:
                    _rotate(a, v, p, q)
        sweeps += 1
        off = _off_norm(a)

    values = np.diag(a).real.copy()
    order = np.argsort(values, kind="stable")
    return EigenResult(values[order], v[:, order], sweeps, off)
