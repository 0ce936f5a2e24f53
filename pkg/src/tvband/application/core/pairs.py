"""Bandlimit pair validation, normalization and analytic families."""

from __future__ import annotations

import math

import numpy as np
import structlog

from tvband.domain.errors import InvalidPairError, NotNormalizedError, ParameterError
from tvband.domain.models import BandlimitPair, IndexSet, TruncationInfo
from tvband.domain.schemas import Violation
from tvband.domain.types import NODE_COINCIDENCE_RTOL, NORMALIZATION_TOL
from tvband.shared.summation import fsum

logger = structlog.get_logger(__name__)


def admissibility_sum(pair: BandlimitPair) -> float:
    """Correctly rounded sum of t'_n / (1 + t_n^2)."""
    return fsum(pair.weights / (1.0 + pair.nodes**2))


def validate_pair(pair: BandlimitPair) -> list[Violation]:
    """List every broken pair invariant; an empty list means the pair is valid.

    Finiteness, positivity and monotonicity are reported separately, one
    violation per offending index. The normalization flag is not checked here.
    """
    violations: list[Violation] = []
    labels = pair.labels
    nodes = pair.nodes
    weights = pair.weights

    finite = np.isfinite(nodes) & np.isfinite(weights)
    violations.extend(
        Violation(
            kind="finiteness",
            index=int(n),
            message=f"index {int(n)}: node {float(t)!r} or weight {float(w)!r} is not finite",
        )
        for n, t, w in zip(labels[~finite], nodes[~finite], weights[~finite], strict=True)
    )

    not_positive = finite & ~(weights > 0)
    violations.extend(
        Violation(
            kind="positivity",
            index=int(n),
            message=f"index {int(n)}: weight {float(w)!r} must be strictly positive",
        )
        for n, w in zip(labels[not_positive], weights[not_positive], strict=True)
    )

    if nodes.size > 1:
        gaps = np.diff(nodes)
        scale = NODE_COINCIDENCE_RTOL * (1.0 + np.abs(nodes[1:]))
        pair_finite = finite[:-1] & finite[1:]
        bad = pair_finite & ~(gaps > scale)
        violations.extend(
            Violation(
                kind="monotonicity",
                index=int(labels[k + 1]),
                message=(
                    f"index {int(labels[k + 1])}: node {float(nodes[k + 1])!r} does not "
                    f"strictly exceed node {float(nodes[k])!r} at index {int(labels[k])}"
                ),
            )
            for k in np.flatnonzero(bad)
        )

    if violations:
        logger.info(
            "Pair validation found violations",
            operation="validate_pair",
            status="warning",
            count=len(violations),
        )
    return violations


def require_valid(pair: BandlimitPair) -> None:
    violations = validate_pair(pair)
    if violations:
        raise InvalidPairError("; ".join(v.message for v in violations))


def normalize_pair(pair: BandlimitPair) -> BandlimitPair:
    """Rescale the weights so that sum t'_n / (1 + t_n^2) equals pi.

    Nodes are carried over untouched and the applied factor is multiplied into
    ``scale``. A pair that already sums to pi within tolerance is returned with
    its weights unchanged.

    Raises:
        InvalidPairError: If the pair is invalid or its admissibility sum is
            zero or not finite.
    """
    require_valid(pair)
    total = admissibility_sum(pair)
    if not math.isfinite(total) or total <= 0.0:
        raise InvalidPairError(f"admissibility sum must be positive, got {total!r}")

    if abs(total - math.pi) <= NORMALIZATION_TOL:
        factor = 1.0
        weights = pair.weights
    else:
        factor = math.pi / total
        weights = pair.weights * factor

    logger.info(
        "Pair normalized",
        operation="normalize_pair",
        status="success",
        size=pair.size,
        admissibility_sum=total,
        factor=factor,
    )
    return BandlimitPair(
        indices=pair.indices,
        nodes=pair.nodes,
        weights=weights,
        normalized=True,
        scale=pair.scale * factor,
        truncation_of=pair.truncation_of,
    )


def require_normalized(pair: BandlimitPair) -> float:
    """Return the admissibility sum, insisting that it equals pi.

    The sum itself is checked rather than the ``normalized`` flag.

    Raises:
        NotNormalizedError: If the sum is off by more than the normalization
            tolerance.
    """
    total = admissibility_sum(pair)
    if not abs(total - math.pi) <= NORMALIZATION_TOL:
        raise NotNormalizedError(
            f"operation needs a normalized pair (sum t'/(1+t^2) = {total!r}); "
            "run normalize_pair first",
        )
    return total


def paley_wiener_pair(
    bandwidth: float,
    half_width: int,
    *,
    normalize: bool = True,
) -> BandlimitPair:
    """Symmetric truncation |n| <= N of the Paley-Wiener pair of bandwidth A.

    Nodes are n*pi/A and weights (pi/A)*tanh(A). The untruncated pair is
    normalized; the truncation is renormalized unless ``normalize`` is False.

    Example:
        >>> pair = paley_wiener_pair(math.pi, 2)
        >>> pair.nodes.tolist()
        [-2.0, -1.0, 0.0, 1.0, 2.0]
    """
    if not (bandwidth > 0 and math.isfinite(bandwidth)):
        raise ParameterError(f"bandwidth must be positive, got {bandwidth!r}")
    if half_width < 0:
        raise ParameterError(f"half width must be non-negative, got {half_width}")

    labels = np.arange(-half_width, half_width + 1, dtype=np.float64)
    step = math.pi / bandwidth
    pair = BandlimitPair(
        indices=IndexSet(-half_width, half_width),
        nodes=labels * step,
        weights=np.full(labels.size, step * math.tanh(bandwidth)),
        truncation_of=TruncationInfo(
            family="paley-wiener",
            bandwidth=bandwidth,
            half_width=half_width,
        ),
    )
    return normalize_pair(pair) if normalize else pair
