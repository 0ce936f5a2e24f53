"""Immutable numeric records shared across the application.

Arrays handed to these records are copied to float64 and marked read-only, so
instances can be shared between worker threads without locking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

import numpy as np
import numpy.typing as npt

from tvband.domain.errors import InvalidPairError, ParameterError

if TYPE_CHECKING:
    from collections.abc import Sequence

    from tvband.domain.types import FloatArray, IndexKind, PairFamily


def _frozen(values: npt.ArrayLike, dtype: Any = np.float64) -> np.ndarray:
    array = np.array(values, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, slots=True)
class IndexSet:
    """Index set of a pair. Only finite ranges carry data."""

    lo: int
    hi: int
    kind: IndexKind = "finite"

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise InvalidPairError(
                f"index range is empty: lo={self.lo} > hi={self.hi}",
            )

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def labels(self) -> np.ndarray:
        return np.arange(self.lo, self.hi + 1, dtype=np.int64)

    def to_dict(self) -> dict[str, int]:
        return {"lo": self.lo, "hi": self.hi}


@dataclass(frozen=True, slots=True)
class TruncationInfo:
    """Which analytic family a finite pair was cut from."""

    family: PairFamily
    bandwidth: float
    half_width: int
    index_kind: IndexKind = "all"

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "bandwidth": self.bandwidth,
            "half_width": self.half_width,
            "index_kind": self.index_kind,
        }


@dataclass(frozen=True, slots=True, eq=False)
class BandlimitPair:
    """Node sequence t_n with positive weights t'_n.

    Construction only checks shapes; use ``validate_pair`` for the
    monotonicity and positivity invariants.
    """

    indices: IndexSet
    nodes: FloatArray
    weights: FloatArray
    normalized: bool = False
    scale: float = 1.0
    truncation_of: TruncationInfo | None = None

    def __post_init__(self) -> None:
        nodes = _frozen(self.nodes)
        weights = _frozen(self.weights)
        if nodes.ndim != 1 or weights.ndim != 1:
            raise InvalidPairError("nodes and weights must be one-dimensional")
        if nodes.shape != weights.shape:
            raise InvalidPairError(
                f"{nodes.size} nodes but {weights.size} weights",
            )
        if nodes.size != len(self.indices):
            raise InvalidPairError(
                f"index range [{self.indices.lo}, {self.indices.hi}] has "
                f"{len(self.indices)} entries but {nodes.size} nodes were given",
            )
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_sequences(
        cls,
        nodes: Sequence[float] | FloatArray,
        weights: Sequence[float] | FloatArray,
        *,
        lo: int = 0,
        normalized: bool = False,
    ) -> BandlimitPair:
        count = len(nodes)
        if count == 0:
            raise InvalidPairError("a pair needs at least one node")
        return cls(
            indices=IndexSet(lo, lo + count - 1),
            nodes=np.asarray(nodes, dtype=np.float64),
            weights=np.asarray(weights, dtype=np.float64),
            normalized=normalized,
        )

    @property
    def size(self) -> int:
        return int(self.nodes.size)

    @property
    def labels(self) -> np.ndarray:
        return self.indices.labels()

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "indices": self.indices.to_dict(),
            "nodes": self.nodes.tolist(),
            "weights": self.weights.tolist(),
            "normalized": self.normalized,
            "scale": self.scale,
        }
        if self.truncation_of is not None:
            data["truncation_of"] = self.truncation_of.to_dict()
        return data


@dataclass(frozen=True, slots=True)
class MobiusParam:
    """Disk automorphism parameter w with |w| < 1."""

    w: complex

    def __post_init__(self) -> None:
        w = complex(self.w)
        if not (math.isfinite(w.real) and math.isfinite(w.imag)) or abs(w) >= 1.0:
            raise ParameterError(f"Mobius parameter must satisfy |w| < 1, got {w}")
        object.__setattr__(self, "w", w)

    def negated(self) -> MobiusParam:
        return MobiusParam(-self.w)


@dataclass(frozen=True, slots=True)
class GridSpec:
    """Uniform evaluation grid t0, t0+dt, ..., t0+(n-1)dt."""

    t0: float
    dt: float
    n: int

    def __post_init__(self) -> None:
        if not (self.dt > 0 and math.isfinite(self.dt)):
            raise ParameterError(f"grid spacing must be positive, got {self.dt}")
        if self.n < 1:
            raise ParameterError(f"grid needs at least one point, got {self.n}")

    @property
    def end(self) -> float:
        return self.t0 + self.dt * (self.n - 1)

    def times(self) -> FloatArray:
        return self.t0 + self.dt * np.arange(self.n, dtype=np.float64)


@dataclass(frozen=True, slots=True, eq=False)
class GridSignal:
    """Real or complex samples on a uniform grid.

    ``window`` is descriptive metadata; it defaults to the grid extent.
    """

    t0: float
    dt: float
    values: np.ndarray
    window: tuple[float, float] | None = None

    def __post_init__(self) -> None:
        raw = np.asarray(self.values)
        dtype = np.complex128 if np.iscomplexobj(raw) else np.float64
        values = _frozen(raw, dtype)
        if values.ndim != 1 or values.size == 0:
            raise ParameterError("grid signal needs a non-empty 1-D value array")
        if not (self.dt > 0 and math.isfinite(self.dt)):
            raise ParameterError(f"grid spacing must be positive, got {self.dt}")
        object.__setattr__(self, "values", values)
        if self.window is None:
            end = self.t0 + self.dt * (values.size - 1)
            object.__setattr__(self, "window", (self.t0, end))

    @classmethod
    def on_grid(cls, grid: GridSpec, values: npt.ArrayLike) -> GridSignal:
        return cls(t0=grid.t0, dt=grid.dt, values=np.asarray(values))

    @property
    def spec(self) -> GridSpec:
        return GridSpec(self.t0, self.dt, int(self.values.size))

    @property
    def end(self) -> float:
        return self.t0 + self.dt * (self.values.size - 1)

    @property
    def is_complex(self) -> bool:
        return bool(np.iscomplexobj(self.values))

    def times(self) -> FloatArray:
        return self.spec.times()


@dataclass(frozen=True, slots=True, eq=False)
class SampleSet:
    """Sampling lattice t_n(theta) with weights t'_n(theta).

    ``labels`` are the spectral indices n (tau(t_n(theta)) = n + theta); a
    lattice may include lo-1 or hi. ``exceptional`` marks the one theta per
    finite pair whose lattice has a point at infinity.
    """

    theta: float
    points: FloatArray
    weights: FloatArray
    labels: np.ndarray
    source_pair: BandlimitPair
    exceptional: bool = False
    window: tuple[float, float] = (-math.inf, math.inf)

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", _frozen(self.points))
        object.__setattr__(self, "weights", _frozen(self.weights))
        object.__setattr__(self, "labels", _frozen(self.labels, np.int64))
        if not (self.points.shape == self.weights.shape == self.labels.shape):
            raise ParameterError("points, weights and labels must align")

    @property
    def size(self) -> int:
        return int(self.points.size)

    @property
    def covers_line(self) -> bool:
        return self.window == (-math.inf, math.inf)

    def rows(self) -> list[tuple[float, int, float, float]]:
        return [
            (self.theta, int(n), float(t), float(w))
            for n, t, w in zip(self.labels, self.points, self.weights, strict=True)
        ]


@dataclass(frozen=True, slots=True, eq=False)
class SampledSignal:
    """Values f(t_n(theta)) attached to their lattice."""

    samples: SampleSet
    values: np.ndarray

    def __post_init__(self) -> None:
        raw = np.asarray(self.values)
        dtype = np.complex128 if np.iscomplexobj(raw) else np.float64
        values = _frozen(raw, dtype)
        if values.shape != self.samples.points.shape:
            raise ParameterError(
                f"{values.size} sample values for {self.samples.size} points",
            )
        object.__setattr__(self, "values", values)


@dataclass(frozen=True, slots=True, eq=False)
class SpectralTable:
    """Tabulated spectral function on (a, b) with ODE endpoint residuals."""

    s_grid: FloatArray
    t_values: FloatArray
    t_prime_values: FloatArray
    a: float
    b: float
    endpoint_residuals: dict[int, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for name in ("s_grid", "t_values", "t_prime_values"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))

    def rows(self) -> list[tuple[float, float, float]]:
        return list(
            zip(
                self.s_grid.tolist(),
                self.t_values.tolist(),
                self.t_prime_values.tolist(),
                strict=True,
            ),
        )

    @property
    def max_endpoint_residual(self) -> float:
        return max(self.endpoint_residuals.values(), default=0.0)
