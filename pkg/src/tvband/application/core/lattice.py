"""Cauchy sums over a weighted lattice with the nearest term isolated.

A lattice is a strictly increasing set of points p_k with weights w_k and
integer labels n_k such that the phase function satisfies
tau(p_k) = n_k + offset. The nodes of a normalized pair form the offset-0
lattice; every non-exceptional sampling sequence forms another one and obeys
the same formulas with the same total mass P = sum w_k / (1 + p_k^2).

Around the nearest point p_j with d = t - p_j the Cauchy sum is split into the
singular part -w_j/d and the regular remainder

    R(t)  = sum_{k != j} w_k (1/(p_k - t) - c_k) - w_j c_j,  c_k = p_k/(1+p_k^2)
    R'(t) = sum_{k != j} w_k / (p_k - t)^2

so that phase, rate and kernel features stay finite on the lattice itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from tvband.domain.errors import NumericDegeneracyError, ParameterError, PoleError
from tvband.shared.summation import complex_fsum, fsum

if TYPE_CHECKING:
    import numpy.typing as npt

    from tvband.domain.models import BandlimitPair, SampleSet
    from tvband.domain.types import ComplexArray, FloatArray

# Rows per block when building (points x lattice) matrices
BLOCK_ELEMENTS = 2_000_000
DEGENERATE_DENOMINATOR = 1e-300


class LocalSums(NamedTuple):
    """Regular Cauchy sums around the nearest lattice point ``index``."""

    index: int
    d: float
    r: float
    r_prime: float


class LocalSumsBlock(NamedTuple):
    index: np.ndarray
    d: FloatArray
    r: FloatArray
    r_prime: FloatArray


def _block_rows(width: int) -> int:
    return max(1, BLOCK_ELEMENTS // max(1, width))


@dataclass(frozen=True, slots=True, eq=False)
class Lattice:
    points: FloatArray
    weights: FloatArray
    labels: np.ndarray
    offset: float
    mass: float

    def __post_init__(self) -> None:
        if self.points.size == 0:
            raise ParameterError("a lattice needs at least one point")

    @classmethod
    def of_pair(cls, pair: BandlimitPair, mass: float | None = None) -> Lattice:
        if mass is None:
            mass = fsum(pair.weights / (1.0 + pair.nodes**2))
        return cls(pair.nodes, pair.weights, pair.labels, 0.0, mass)

    @classmethod
    def of_samples(cls, samples: SampleSet, mass: float) -> Lattice:
        return cls(samples.points, samples.weights, samples.labels, samples.theta, mass)

    @property
    def size(self) -> int:
        return int(self.points.size)

    @property
    def centers(self) -> FloatArray:
        return self.points / (1.0 + self.points**2)

    @property
    def signs(self) -> FloatArray:
        return np.where(self.labels % 2 == 0, 1.0, -1.0)

    def theta_star(self) -> float:
        """Level theta* with Theta(infinity) = exp(2 pi i theta*), in (0, 1)."""
        s_inf = -fsum(self.weights * self.centers)
        return 0.5 + math.atan(s_inf / self.mass) / math.pi

    # Nearest point search

    def nearest(self, t: float) -> int:
        k = int(np.searchsorted(self.points, t))
        if k == 0:
            return 0
        if k == self.size:
            return self.size - 1
        return k if self.points[k] - t < t - self.points[k - 1] else k - 1

    def nearest_many(self, ts: FloatArray) -> np.ndarray:
        k = np.searchsorted(self.points, ts)
        lower = np.clip(k - 1, 0, self.size - 1)
        upper = np.clip(k, 0, self.size - 1)
        pick_upper = np.abs(self.points[upper] - ts) < np.abs(ts - self.points[lower])
        return np.where(pick_upper, upper, lower)

    # Scalar evaluation (correctly rounded sums)

    def local_sums(self, t: float) -> LocalSums:
        j = self.nearest(t)
        diff = self.points - t
        diff[j] = math.inf
        r = fsum(self.weights * (1.0 / diff - self.centers))
        r_prime = fsum(self.weights / diff**2)
        return LocalSums(j, t - float(self.points[j]), r, r_prime)

    def phase(self, t: float) -> float:
        """Continuous phase tau(t); equals label + offset on lattice points."""
        j, d, r, _ = self.local_sums(t)
        w_j = float(self.weights[j])
        angle = math.atan2(self.mass * d, w_j - r * d)
        return self.offset + float(self.labels[j]) + angle / math.pi

    def rate(self, t: float) -> float:
        """Derivative tau'(t), strictly positive."""
        j, d, r, r_prime = self.local_sums(t)
        w_j = float(self.weights[j])
        numerator = self.mass * (w_j + r_prime * d * d)
        denominator = math.pi * ((self.mass * d) ** 2 + (r * d - w_j) ** 2)
        return numerator / denominator

    def f_squared(self, t: float) -> float:
        """(sum_k w_k / (t - p_k)^2)^-1, zero on the lattice."""
        j, d, _, r_prime = self.local_sums(t)
        return d * d / (float(self.weights[j]) + r_prime * d * d)

    def multiplier(self, t: float) -> complex:
        """Multiplier M(t) with |M|^2 tau' = pi / P, finite on the lattice."""
        j, d, r, r_prime = self.local_sums(t)
        w_j = float(self.weights[j])
        sign = 1.0 if int(self.labels[j]) % 2 == 0 else -1.0
        value = complex(self.mass * d, -(r * d - w_j)) / math.sqrt(
            w_j + r_prime * d * d,
        )
        return (math.pi / self.mass) * sign * value

    # Complex evaluation

    def _complex_remainder(self, z: complex) -> tuple[int, complex]:
        j = self.nearest(z.real)
        diff = (self.points - z).astype(np.complex128)
        diff[j] = complex(math.inf, 0.0)
        remainder = complex_fsum(self.weights * (1.0 / diff - self.centers))
        return j, remainder

    def cauchy_transform(self, z: complex) -> complex:
        """G(z) = sum w_k (1/(p_k - z) - c_k)."""
        j, remainder = self._complex_remainder(z)
        gap = complex(self.points[j]) - z
        if gap == 0:
            raise PoleError(f"Cauchy transform has a pole at lattice point {z}")
        return complex(self.weights[j]) / gap + remainder

    def inner_ratio(self, z: complex) -> complex:
        """(G - iP)/(G + iP) with the nearest term cleared from the denominator."""
        j, remainder = self._complex_remainder(z)
        w_j = float(self.weights[j])
        gap = complex(self.points[j]) - z
        numerator = w_j + gap * (remainder - 1j * self.mass)
        denominator = w_j + gap * (remainder + 1j * self.mass)
        if abs(denominator) < DEGENERATE_DENOMINATOR:
            raise NumericDegeneracyError(
                f"characteristic function denominator vanishes at z={z}",
            )
        return numerator / denominator

    # Vectorized evaluation (numpy pairwise sums)

    def local_sums_many(self, ts: npt.ArrayLike) -> LocalSumsBlock:
        ts = np.atleast_1d(np.asarray(ts, dtype=np.float64))
        index = self.nearest_many(ts)
        r = np.empty_like(ts)
        r_prime = np.empty_like(ts)
        centers = self.centers
        step = _block_rows(self.size)
        for start in range(0, ts.size, step):
            rows = slice(start, start + step)
            diff = self.points[None, :] - ts[rows, None]
            diff[np.arange(diff.shape[0]), index[rows]] = np.inf
            r[rows] = np.sum(self.weights * (1.0 / diff - centers), axis=1)
            r_prime[rows] = np.sum(self.weights / diff**2, axis=1)
        return LocalSumsBlock(index, ts - self.points[index], r, r_prime)

    def phase_many(self, ts: npt.ArrayLike) -> FloatArray:
        index, d, r, _ = self.local_sums_many(ts)
        w_j = self.weights[index]
        angle = np.arctan2(self.mass * d, w_j - r * d)
        return self.offset + self.labels[index] + angle / np.pi

    def rate_many(self, ts: npt.ArrayLike) -> FloatArray:
        index, d, r, r_prime = self.local_sums_many(ts)
        w_j = self.weights[index]
        numerator = self.mass * (w_j + r_prime * d * d)
        return numerator / (np.pi * ((self.mass * d) ** 2 + (r * d - w_j) ** 2))

    def features(self, ts: npt.ArrayLike, epsilon: float = 0.0) -> FloatArray:
        """Unit feature vectors phi(t) with K(t, s) = phi(t) . phi(s).

        phi_k(t) = (-1)^n_j g(t) sqrt(w_k) d / (t - p_k) for k != j and
        (-1)^n_j g(t) sqrt(w_j) for the nearest point j, where
        g = (w_j + d^2 R')^(-1/2). Points within ``epsilon * (1 + |p_j|)`` of
        p_j are evaluated at p_j.
        """
        ts = np.atleast_1d(np.asarray(ts, dtype=np.float64))
        index = self.nearest_many(ts)
        nearest_points = self.points[index]
        d = ts - nearest_points
        d = np.where(np.abs(d) <= epsilon * (1.0 + np.abs(nearest_points)), 0.0, d)

        root_w = np.sqrt(self.weights)
        signs = self.signs[index]
        out = np.empty((ts.size, self.size), dtype=np.float64)
        step = _block_rows(self.size)
        for start in range(0, ts.size, step):
            rows = slice(start, start + step)
            local = np.arange(min(step, ts.size - start))
            diff = (nearest_points[rows] + d[rows])[:, None] - self.points[None, :]
            diff[local, index[rows]] = np.inf
            r_prime = np.sum(self.weights / diff**2, axis=1)
            w_j = self.weights[index[rows]]
            g = signs[rows] / np.sqrt(w_j + d[rows] ** 2 * r_prime)
            block = (g * d[rows])[:, None] * root_w[None, :] / diff
            block[local, index[rows]] = g * root_w[index[rows]]
            out[rows] = block
        return out
