"""Oracle-versus-analytic cross checks behind ``tvband verify``."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np
import structlog

from tvband.application.charfun.inner import herglotz_eval, multiplier_M, theta_eval
from tvband.application.kernel.context import KernelContext
from tvband.application.kernel.evaluate import kernel_grid
from tvband.application.oracle.model import (
    ExtensionSpectrum,
    build_model,
    extension_spectrum,
    oracle_weights,
)
from tvband.application.spectral.phase import tau_prime
from tvband.application.spectral.sequences import sampling_sequence
from tvband.domain.models import BandlimitPair, SampleSet
from tvband.domain.schemas import CheckResult, VerifyReport
from tvband.shared.summation import fsum

logger = structlog.get_logger(__name__)

DEFAULT_THETAS = (0.0, 0.25, 0.5, 0.75)
CHECK_POINTS = 200

SEQUENCE_TOL = 1e-8
WEIGHT_TOL = 1e-7
GRAM_TOL = 1e-10
OVERLAP_TOL = 1e-8
CONSERVATION_TOL = 1e-10
UNIMODULAR_TOL = 1e-10
THETA_AT_I_TOL = 1e-12
HERGLOTZ_TOL = 1e-12
MULTIPLIER_TOL = 1e-8


def _relative_gap(a: np.ndarray, b: np.ndarray) -> float:
    if a.shape != b.shape:
        return math.inf
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b) / np.maximum(1.0, np.abs(b))))


def _check_points(pair: BandlimitPair) -> np.ndarray:
    span = max(1.0, float(pair.nodes[-1] - pair.nodes[0]))
    lo = float(pair.nodes[0]) - span
    hi = float(pair.nodes[-1]) + span
    grid = np.linspace(lo, hi, CHECK_POINTS)
    return grid[~np.isin(grid, pair.nodes)]


def _sequence_checks(
    samples: SampleSet,
    spectrum: ExtensionSpectrum,
    weights: np.ndarray,
) -> list[CheckResult]:
    tag = f"theta={samples.theta:g}"
    return [
        CheckResult.of(
            f"oracle_sequence[{tag}]",
            _relative_gap(spectrum.values, samples.points),
            SEQUENCE_TOL,
        ),
        CheckResult.of(
            f"oracle_weights[{tag}]",
            _relative_gap(weights, samples.weights),
            WEIGHT_TOL,
        ),
    ]


def _gram_check(ctx: KernelContext, samples: SampleSet) -> CheckResult:
    gram = kernel_grid(ctx, samples.points, samples.points)
    residual = float(np.max(np.abs(gram - np.eye(samples.size)))) if samples.size else 0.0
    return CheckResult.of(f"orthonormality[theta={samples.theta:g}]", residual, GRAM_TOL)


def _conservation_check(samples: SampleSet) -> CheckResult:
    total = fsum(samples.weights / (1.0 + samples.points**2))
    return CheckResult.of(
        f"normalization[theta={samples.theta:g}]",
        abs(total - math.pi),
        CONSERVATION_TOL,
    )


def _overlap_check(
    ctx: KernelContext,
    left: tuple[SampleSet, ExtensionSpectrum],
    right: tuple[SampleSet, ExtensionSpectrum],
) -> CheckResult:
    rows, row_spectrum = left
    cols, col_spectrum = right
    name = f"kernel_overlap[theta={rows.theta:g},beta={cols.theta:g}]"
    if rows.size != row_spectrum.values.size or cols.size != col_spectrum.values.size:
        return CheckResult.of(name, math.inf, OVERLAP_TOL)
    if rows.size == 0 or cols.size == 0:
        # A deflated one-node pair has no finite points at theta*.
        return CheckResult.of(name, 0.0, OVERLAP_TOL)
    kernel = np.abs(kernel_grid(ctx, rows.points, cols.points))
    overlaps = np.abs(row_spectrum.vectors.conj().T @ col_spectrum.vectors)
    return CheckResult.of(name, float(np.max(np.abs(kernel - overlaps))), OVERLAP_TOL)


def _inner_function_checks(pair: BandlimitPair) -> list[CheckResult]:
    points = _check_points(pair)
    unimodular = max(abs(abs(theta_eval(pair, t)) - 1.0) for t in points)
    upper = points + 1j * np.geomspace(1e-3, 1e3, points.size)
    herglotz_floor = min(herglotz_eval(pair, z).real for z in upper)
    multiplier = max(
        abs(abs(multiplier_M(pair, t)) ** 2 * tau_prime(pair, t) - 1.0) for t in points
    )
    return [
        CheckResult.of("theta_unimodular", unimodular, UNIMODULAR_TOL),
        CheckResult.of("theta_at_i", abs(theta_eval(pair, 1j)), THETA_AT_I_TOL),
        CheckResult.of("herglotz_positive", max(0.0, -herglotz_floor), HERGLOTZ_TOL),
        CheckResult.of("multiplier_modulus", multiplier, MULTIPLIER_TOL),
    ]


def run_verification(
    pair: BandlimitPair,
    thetas: Sequence[float] = DEFAULT_THETAS,
) -> VerifyReport:
    """Compare the analytic routines with the matrix model on one pair.

    Raises:
        NotNormalizedError: If the pair is not normalized.
        DimensionBudgetError: If the pair is too large for the matrix model.
    """
    logger.info(
        "Verification started",
        operation="run_verification",
        status="started",
        pair_size=pair.size,
        thetas=list(thetas),
    )
    model = build_model(pair)
    ctx = KernelContext.create(pair)
    levels: list[tuple[SampleSet, ExtensionSpectrum]] = []
    checks: list[CheckResult] = []
    for theta in thetas:
        samples = sampling_sequence(pair, theta)
        spectrum = extension_spectrum(model, theta)
        levels.append((samples, spectrum))
        checks.extend(_sequence_checks(samples, spectrum, oracle_weights(model, theta)))
        checks.append(_gram_check(ctx, samples))
        if not samples.exceptional:
            checks.append(_conservation_check(samples))
    for left, right in zip(levels, levels[1:], strict=False):
        checks.append(_overlap_check(ctx, left, right))
    checks.extend(_inner_function_checks(pair))

    report = VerifyReport(pair_size=pair.size, thetas=list(thetas), checks=checks)
    failed = [check.name for check in checks if check.status == "fail"]
    logger.info(
        "Verification finished",
        operation="run_verification",
        status="success" if report.passed else "warning",
        checks=len(checks),
        failed=failed,
    )
    return report
