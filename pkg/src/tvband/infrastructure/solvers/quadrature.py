"""Composite Gauss-Legendre rules on arbitrary panel breaks."""

from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING

import numpy as np
from numpy.polynomial.legendre import leggauss

if TYPE_CHECKING:
    import numpy.typing as npt

    from tvband.domain.types import FloatArray


@lru_cache(maxsize=16)
def gauss_legendre_rule(order: int) -> tuple[FloatArray, FloatArray]:
    """Nodes and weights of the ``order``-point rule on [-1, 1]."""
    nodes, weights = leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def refine_breaks(breaks: FloatArray, level: int) -> FloatArray:
    """Split every panel into 2**level equal parts."""
    if level == 0:
        return breaks
    parts = 2**level
    fractions = np.arange(parts, dtype=np.float64) / parts
    left = breaks[:-1, None] + fractions[None, :] * np.diff(breaks)[:, None]
    return np.append(left.ravel(), breaks[-1])


def panel_rule(
    breaks: npt.ArrayLike,
    order: int,
    level: int = 0,
) -> tuple[FloatArray, FloatArray]:
    """Composite rule over the panels defined by sorted ``breaks``.

    Args:
        breaks: Strictly increasing panel boundaries.
        order: Points per panel.
        level: Each panel is halved ``level`` times first.

    Returns:
        Quadrature points and weights, concatenated panel by panel.

    Example:
        >>> x, w = panel_rule([0.0, 1.0, 3.0], 4)
        >>> round(float(w @ x**2), 12)
        9.0
    """
    edges = refine_breaks(np.asarray(breaks, dtype=np.float64), level)
    nodes, weights = gauss_legendre_rule(order)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    points = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    scaled = (half[:, None] * weights[None, :]).ravel()
    return points, scaled
