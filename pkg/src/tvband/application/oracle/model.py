"""Finite matrix realization used as brute-force ground truth.

The pair becomes the diagonal operator T0 = diag(t_n) with deficiency vectors
phi_+- = sqrt(t'_n) / (t_n -+ i). The Cayley transform b(T0) restricted to the
complement of phi_+ is a partial isometry V; its rank-one unitary completions
U(alpha) have the sampling sequences as inverse-Cayley spectra.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
import structlog

from tvband.application.core.pairs import require_normalized
from tvband.domain.errors import DimensionBudgetError, ParameterError
from tvband.domain.models import BandlimitPair
from tvband.domain.types import EXCEPTIONAL_THETA_TOL, ComplexArray, FloatArray
from tvband.infrastructure.config.settings import get_settings
from tvband.infrastructure.solvers.eigen import jacobi_eigh

logger = structlog.get_logger(__name__)

UNIMODULAR_TOL = 1e-12


@dataclass(frozen=True, slots=True, eq=False)
class MatrixModel:
    """Dense model of the symmetric operator of a pair.

    Attributes:
        nodes: Diagonal of T0.
        weights: Pair weights t'_n.
        phi_plus: sqrt(t'_n) / (t_n - i).
        phi_minus: sqrt(t'_n) / (t_n + i).
        isometry: V = b(T0) (I - P+), zero on phi_plus.
        norm_sq: ||phi_plus||^2, equal to pi for normalized pairs.
    """

    nodes: FloatArray
    weights: FloatArray
    phi_plus: ComplexArray
    phi_minus: ComplexArray
    isometry: ComplexArray
    norm_sq: float

    @property
    def dimension(self) -> int:
        return int(self.nodes.size)


@dataclass(frozen=True, slots=True, eq=False)
class ExtensionSpectrum:
    """Finite eigenvalues (ascending) and unit eigenvectors of U(exp(2 pi i theta))."""

    theta: float
    values: FloatArray
    vectors: ComplexArray
    exceptional: bool


def build_model(pair: BandlimitPair) -> MatrixModel:
    """Assemble the matrix model of a normalized pair.

    Raises:
        DimensionBudgetError: If the pair exceeds ``TVBAND_MAX_MODEL_DIMENSION``.
    """
    limit = get_settings().max_model_dimension
    if pair.size > limit:
        raise DimensionBudgetError(
            f"matrix model of dimension {pair.size} exceeds the budget of {limit}",
        )
    require_normalized(pair)
    nodes = pair.nodes
    root_w = np.sqrt(pair.weights)
    phi_plus = root_w / (nodes - 1j)
    phi_minus = root_w / (nodes + 1j)
    norm_sq = float(np.vdot(phi_plus, phi_plus).real)
    cayley = (nodes - 1j) / (nodes + 1j)
    projector = np.outer(phi_plus, phi_plus.conj()) / norm_sq
    isometry = cayley[:, None] * (np.eye(pair.size) - projector)
    logger.debug(
        "Matrix model built",
        operation="build_model",
        status="success",
        dimension=pair.size,
        norm_sq=norm_sq,
    )
    return MatrixModel(nodes, pair.weights, phi_plus, phi_minus, isometry, norm_sq)


def unitary_extension(model: MatrixModel, alpha: complex) -> ComplexArray:
    """U(alpha) = V + alpha <., phi_+> phi_- / ||phi_+||^2 for |alpha| = 1."""
    alpha = complex(alpha)
    if abs(abs(alpha) - 1.0) > UNIMODULAR_TOL:
        raise ParameterError(f"alpha must be unimodular, got |alpha|={abs(alpha)!r}")
    rank_one = np.outer(model.phi_minus, model.phi_plus.conj()) / model.norm_sq
    return model.isometry + alpha * rank_one


def inverse_cayley(values: np.ndarray) -> np.ndarray:
    """t = i (1 + lambda) / (1 - lambda)."""
    return 1j * (1.0 + values) / (1.0 - values)


def _hermitian_generator(unitary: ComplexArray) -> ComplexArray:
    identity = np.eye(unitary.shape[0], dtype=np.complex128)
    generator = 1j * np.linalg.solve(identity - unitary, identity + unitary)
    return 0.5 * (generator + generator.conj().T)


def _deflation_basis(unitary: ComplexArray) -> ComplexArray:
    """Orthonormal basis of the complement of the eigenvector for eigenvalue 1."""
    n = unitary.shape[0]
    _, _, vh = np.linalg.svd(np.eye(n) - unitary)
    fixed = vh[-1].conj()
    q, _ = np.linalg.qr(np.column_stack([fixed, np.eye(n, dtype=np.complex128)]))
    return q[:, 1:n]


def extension_spectrum(model: MatrixModel, theta: float) -> ExtensionSpectrum:
    """Real spectrum of the self-adjoint extension for level theta.

    At the exceptional level one eigenvalue of U is 1; its eigenvector is
    deflated and the remaining n - 1 finite eigenvalues are returned.
    """
    if not 0.0 <= theta < 1.0:
        raise ParameterError(f"theta must lie in [0, 1), got {theta!r}")
    unitary = unitary_extension(model, cmath.exp(2j * math.pi * theta))
    gap = float(np.min(np.abs(1.0 - np.linalg.eigvals(unitary))))
    exceptional = gap < EXCEPTIONAL_THETA_TOL

    if exceptional:
        basis = _deflation_basis(unitary)
        reduced = basis.conj().T @ unitary @ basis
        result = jacobi_eigh(_hermitian_generator(reduced)) if reduced.size else None
        values = result.values if result else np.empty(0)
        vectors = basis @ result.vectors if result else np.empty((model.dimension, 0))
        logger.info(
            "Exceptional extension deflated",
            operation="extension_spectrum",
            status="warning",
            theta=theta,
            gap=gap,
        )
    else:
        result = jacobi_eigh(_hermitian_generator(unitary))
        values, vectors = result.values, result.vectors
    return ExtensionSpectrum(theta, values, vectors, exceptional)


def oracle_weights(model: MatrixModel, theta: float) -> FloatArray:
    """t'_n(theta) = (pi / ||phi_+||^2) (1 + t_n(theta)^2) |<psi_n, phi_+>|^2."""
    spectrum = extension_spectrum(model, theta)
    overlaps = np.abs(spectrum.vectors.conj().T @ model.phi_plus) ** 2
    return (math.pi / model.norm_sq) * (1.0 + spectrum.values**2) * overlaps
