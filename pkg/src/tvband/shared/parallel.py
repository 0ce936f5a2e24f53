"""Thread-pool fan-out with deterministic result order."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import TYPE_CHECKING, TypeVar

import structlog

from tvband.infrastructure.config.settings import get_settings

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

logger = structlog.get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(
    func: Callable[[T], R],
    items: Sequence[T],
    max_workers: int | None = None,
) -> list[R]:
    """Apply ``func`` to every item, returning results in input order.

    Workers are capped by ``TVBAND_THREADS``; a single worker or a single item
    runs inline.
    """
    cap = get_settings().threads
    workers = min(max_workers or cap, cap, len(items))
    if workers <= 1:
        return [func(item) for item in items]

    results: list[R | None] = [None] * len(items)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        future_to_index = {
            executor.submit(func, item): index for index, item in enumerate(items)
        }
        for future in as_completed(future_to_index):
            index = future_to_index[future]
            try:
                results[index] = future.result()
            except Exception:
                logger.exception(
                    "Parallel task failed",
                    operation="parallel_map",
                    status="error",
                    index=index,
                )
                for pending in future_to_index:
                    pending.cancel()
                raise
    return results  # type: ignore[return-value]
