"""JSON loaders returning ``returns`` Results instead of raising."""

import json
from pathlib import Path
from typing import Any

import structlog
from pydantic import ValidationError
from returns.result import Failure, Result, Success

from tvband.domain.errors import InvalidPairError
from tvband.domain.models import BandlimitPair
from tvband.domain.schemas import PairDocument, RunConfig
from tvband.infrastructure.storage.artifacts import pair_from_document

logger = structlog.get_logger(__name__)


def load_json_file(path: Path) -> Result[dict[str, Any], str]:
    """Load a JSON object from ``path``.

    Args:
        path: File to read.

    Returns:
        Result containing the decoded object on success, or an error message.

    Example:
        >>> load_json_file(Path("missing.json")).value_or({})
        {}
    """
    logger.info(
        "Loading JSON file",
        operation="load_json_file",
        status="started",
        path=str(path),
    )
    if not path.is_file():
        return Failure(f"{path}: file not found")
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        error_msg = f"{path}: invalid JSON: {e}"
        logger.warning(
            "Invalid JSON file",
            operation="load_json_file",
            status="error",
            path=str(path),
            error=error_msg,
        )
        return Failure(error_msg)
    except OSError as e:
        return Failure(f"{path}: {e}")
    if not isinstance(data, dict):
        return Failure(f"{path}: expected a JSON object at top level")
    return Success(data)


def _validate_pair(data: dict[str, Any], path: Path) -> Result[BandlimitPair, str]:
    try:
        document = PairDocument.model_validate(data)
        return Success(pair_from_document(document))
    except (ValidationError, InvalidPairError) as e:
        return Failure(f"{path}: {e}")


def _validate_run_config(data: dict[str, Any], path: Path) -> Result[RunConfig, str]:
    try:
        return Success(RunConfig.model_validate(data))
    except ValidationError as e:
        return Failure(f"{path}: {e}")


def load_pair_document(path: Path) -> Result[BandlimitPair, str]:
    """Load and schema-check a bandlimit pair JSON file."""
    return load_json_file(path).bind(lambda data: _validate_pair(data, path))


def load_run_config(path: Path) -> Result[RunConfig, str]:
    """Load a run-configuration JSON file."""
    return load_json_file(path).bind(lambda data: _validate_run_config(data, path))
