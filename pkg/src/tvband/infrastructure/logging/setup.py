import logging
import os
import uuid
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any

import numpy as np
import structlog
from structlog.contextvars import bind_contextvars, clear_contextvars

LOG_DIR_ENV_VAR = "TVBAND_LOG_DIR"
DEFAULT_LOG_DIR = Path.home() / ".tvband" / "logs"
MAX_INLINE_ARRAY = 8


class DropNumpyFloatingPointFilter(logging.Filter):
    """Keep routed numpy floating-point warnings out of the console.

    Singular terms are isolated before evaluation, so the remaining warnings
    come from inf/nan probing in the root and tail searches.
    """

    def filter(self, record: logging.LogRecord) -> bool:
        message = record.getMessage()
        return not (
            record.name == "py.warnings"
            and ("divide by zero" in message or "invalid value" in message)
        )


def numpy_to_builtin(
    logger: Any,
    method_name: str,
    event_dict: dict[str, Any],
) -> dict[str, Any]:
    """Structlog processor turning numpy values into JSON-safe builtins.

    Scalars become Python numbers; short arrays become lists and longer ones
    a shape summary.
    """
    for key, value in event_dict.items():
        if isinstance(value, np.generic):
            item = value.item()
            event_dict[key] = [item.real, item.imag] if isinstance(item, complex) else item
        elif isinstance(value, np.ndarray):
            if value.size <= MAX_INLINE_ARRAY and not np.iscomplexobj(value):
                event_dict[key] = value.tolist()
            else:
                event_dict[key] = {"shape": list(value.shape), "dtype": str(value.dtype)}
        elif isinstance(value, complex):
            event_dict[key] = [value.real, value.imag]
    return event_dict


def _log_dir() -> Path:
    override = os.environ.get(LOG_DIR_ENV_VAR)
    return Path(override).expanduser() if override else DEFAULT_LOG_DIR


def _int_env(name: str, default: int) -> int:
    try:
        return int(os.environ.get(name, str(default)))
    except ValueError:
        return default


def setup_logging(format: str | None = None) -> None:
    """Route stdlib and structlog output to a rotating file and the console.

    Environment variables:
        LOG_LEVEL: Log level (default: INFO)
        TVBAND_LOG_DIR: Log directory (default: ~/.tvband/logs)
        LOG_FILE_NAME: File name inside the log directory (default: tvband.log)
        LOG_MAX_SIZE: Max size in MB before rotating (default: 10MB)
        LOG_BACKUP_COUNT: Number of backup files to keep (default: 5)
        CORRELATION_ID: Id bound to every event (default: a fresh uuid4)
    """
    log_dir = _log_dir().resolve()
    log_file: Path | None = (log_dir / os.environ.get("LOG_FILE_NAME", "tvband.log")).resolve()
    if log_file.parent != log_dir:
        raise ValueError(f"LOG_FILE_NAME must be a plain file name inside {log_dir}")

    log_level_str = os.environ.get("LOG_LEVEL", "INFO").upper()
    log_level = getattr(logging, log_level_str, logging.INFO)
    max_bytes = _int_env("LOG_MAX_SIZE", 10) * 1024 * 1024
    backup_count = _int_env("LOG_BACKUP_COUNT", 5)

    handlers: list[logging.Handler] = [logging.StreamHandler()]
    try:
        log_dir.mkdir(parents=True, exist_ok=True)
        handlers.append(
            RotatingFileHandler(
                log_file,
                maxBytes=max_bytes,
                backupCount=backup_count,
                encoding="utf-8",
            ),
        )
    except OSError:
        # Read-only home: console only.
        log_file = None

    formatter = logging.Formatter(format or "%(asctime)s - %(levelname)s - %(name)s - %(message)s")
    for handler in handlers:
        handler.setFormatter(formatter)
        handler.addFilter(DropNumpyFloatingPointFilter())

    logging.captureWarnings(True)
    logging.basicConfig(level=log_level, handlers=handlers, force=True)

    clear_contextvars()
    bind_contextvars(correlation_id=os.environ.get("CORRELATION_ID", str(uuid.uuid4())))
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            numpy_to_builtin,
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.JSONRenderer(),
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )

    logging.getLogger(__name__).debug(
        "Logging configured: level=%s, file=%s, max_size=%d bytes, backup_count=%d",
        log_level_str,
        log_file,
        max_bytes,
        backup_count,
    )
