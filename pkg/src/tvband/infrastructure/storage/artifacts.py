"""Reading and writing pair JSON, CSV tables and JSON reports.

Every writer goes through a temp file in the destination directory followed by
``os.replace`` so readers never observe a partial artifact.
"""

from __future__ import annotations

import json
import os
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import TYPE_CHECKING, Any

import numpy as np
import pandas as pd
import structlog

from tvband.domain.errors import ParameterError
from tvband.domain.models import (
    BandlimitPair,
    GridSignal,
    IndexSet,
    SampleSet,
    SpectralTable,
    TruncationInfo,
)
from tvband.domain.schemas import IndexRange, PairDocument, TruncationDocument

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

    from pydantic import BaseModel

logger = structlog.get_logger(__name__)

FLOAT_FORMAT = "%.17g"
GRID_SPACING_RTOL = 1e-9


def format_float(value: float) -> str:
    return FLOAT_FORMAT % value


@contextmanager
def atomic_path(path: Path) -> Iterator[Path]:
    """Yield a temporary sibling path that replaces ``path`` on success."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    os.close(fd)
    tmp_path = Path(tmp_name)
    try:
        yield tmp_path
        os.replace(tmp_path, path)
    finally:
        if tmp_path.exists():
            tmp_path.unlink()


def write_text_atomic(path: Path, text: str) -> None:
    with atomic_path(path) as tmp:
        tmp.write_text(text, encoding="utf-8")


def write_json(path: Path, payload: dict[str, Any]) -> None:
    write_text_atomic(path, json.dumps(payload, indent=2) + "\n")


def write_model(path: Path, model: BaseModel) -> None:
    write_json(path, model.model_dump(mode="json"))


def write_frame(path: Path, frame: pd.DataFrame) -> None:
    with atomic_path(path) as tmp:
        frame.to_csv(tmp, index=False, float_format=FLOAT_FORMAT)
    logger.info(
        "Table written",
        operation="write_frame",
        status="success",
        path=str(path),
        rows=len(frame),
        columns=list(frame.columns),
    )


# Pairs


def pair_from_document(document: PairDocument) -> BandlimitPair:
    truncation = None
    if document.truncation_of is not None:
        truncation = TruncationInfo(
            family=document.truncation_of.family,
            bandwidth=document.truncation_of.bandwidth,
            half_width=document.truncation_of.half_width,
            index_kind=document.truncation_of.index_kind,
        )
    return BandlimitPair(
        indices=IndexSet(document.indices.lo, document.indices.hi),
        nodes=np.asarray(document.nodes, dtype=np.float64),
        weights=np.asarray(document.weights, dtype=np.float64),
        normalized=document.normalized,
        scale=document.scale,
        truncation_of=truncation,
    )


def pair_to_document(
    pair: BandlimitPair,
    admissibility_sum: float | None = None,
) -> PairDocument:
    truncation = None
    if pair.truncation_of is not None:
        truncation = TruncationDocument(**pair.truncation_of.to_dict())
    return PairDocument(
        indices=IndexRange(lo=pair.indices.lo, hi=pair.indices.hi),
        nodes=pair.nodes.tolist(),
        weights=pair.weights.tolist(),
        normalized=pair.normalized,
        scale=pair.scale,
        admissibility_sum=admissibility_sum,
        truncation_of=truncation,
    )


def write_pair(
    path: Path,
    pair: BandlimitPair,
    admissibility_sum: float | None = None,
) -> None:
    write_model(path, pair_to_document(pair, admissibility_sum))


# Grid signals


def read_grid_signal(path: Path) -> GridSignal:
    """Parse a ``t,value`` or ``t,re,im`` CSV into a uniform-grid signal."""
    times, values = read_sample_values(path)
    if times.size == 0:
        raise ParameterError(f"{path}: signal has no rows")
    if times.size == 1:
        return GridSignal(t0=float(times[0]), dt=1.0, values=values)
    steps = np.diff(times)
    dt = float(np.mean(steps))
    if dt <= 0 or np.max(np.abs(steps - dt)) > GRID_SPACING_RTOL * max(1.0, dt):
        raise ParameterError(f"{path}: sample times are not a uniform increasing grid")
    return GridSignal(t0=float(times[0]), dt=dt, values=values)


def grid_signal_frame(signal: GridSignal) -> pd.DataFrame:
    times = signal.times()
    if signal.is_complex:
        return pd.DataFrame(
            {"t": times, "re": signal.values.real, "im": signal.values.imag},
        )
    return pd.DataFrame({"t": times, "value": signal.values})


def write_grid_signal(path: Path, signal: GridSignal) -> None:
    write_frame(path, grid_signal_frame(signal))


# Numeric tables


def sample_sets_frame(sample_sets: Iterable[SampleSet]) -> pd.DataFrame:
    rows = [row for sample_set in sample_sets for row in sample_set.rows()]
    frame = pd.DataFrame(rows, columns=["theta", "n", "t", "t_prime"])
    return frame.sort_values(["theta", "t"], kind="stable").reset_index(drop=True)


def spectral_table_frame(table: SpectralTable) -> pd.DataFrame:
    return pd.DataFrame(
        {"s": table.s_grid, "t": table.t_values, "t_prime": table.t_prime_values},
    )


def kernel_grid_frame(
    ts: np.ndarray,
    ss: np.ndarray,
    values: np.ndarray,
) -> pd.DataFrame:
    t_mesh, s_mesh = np.meshgrid(ts, ss, indexing="ij")
    return pd.DataFrame(
        {"t": t_mesh.ravel(), "s": s_mesh.ravel(), "K": np.asarray(values).ravel()},
    )


def read_sample_values(path: Path) -> tuple[np.ndarray, np.ndarray]:
    """Parse ``t,value`` or ``t,re,im`` sample values at arbitrary times."""
    frame = pd.read_csv(path, float_precision="round_trip")
    columns = [str(c).strip() for c in frame.columns]
    times = frame.iloc[:, 0].to_numpy(dtype=np.float64)
    if columns == ["t", "value"]:
        return times, frame["value"].to_numpy(dtype=np.float64)
    if columns == ["t", "re", "im"]:
        values = frame["re"].to_numpy(dtype=np.float64) + 1j * frame["im"].to_numpy(
            dtype=np.float64,
        )
        return times, values
    raise ParameterError(
        f"{path}: expected header 't,value' or 't,re,im', got {','.join(columns)}",
    )
