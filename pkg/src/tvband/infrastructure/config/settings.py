"""Runtime settings loaded from the environment."""

import os
from functools import lru_cache
from pathlib import Path

import structlog
from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = structlog.get_logger(__name__)

ENV_FILE_ENV_VAR = "TVBAND_ENV_FILE"
DEFAULT_HOME_ENV_FILE = Path.home() / ".tvband" / ".env"
_env_files_loaded = [False]


def _default_threads() -> int:
    return max(1, min(8, os.cpu_count() or 1))


def _load_env_files() -> None:
    """Load .env files once per process; earlier candidates win."""
    if _env_files_loaded[0]:
        return

    candidates: list[Path] = []
    env_override = os.environ.get(ENV_FILE_ENV_VAR)
    if env_override:
        candidates.append(Path(env_override))
    candidates.extend([DEFAULT_HOME_ENV_FILE, Path.cwd() / ".env"])

    loaded: list[str] = []
    for candidate in candidates:
        path = candidate.expanduser()
        if path.is_file():
            load_dotenv(dotenv_path=path, override=False)
            loaded.append(str(path))

    if loaded:
        logger.info(
            "Environment configuration loaded",
            operation="load_env",
            status="success",
            loaded_paths=loaded,
        )
    _env_files_loaded[0] = True


class Settings(BaseSettings):
    """Numerical defaults and resource limits.

    Attributes:
        threads: Worker cap for thread-pool fan-out (``TVBAND_THREADS``).
        root_xtol: Absolute tolerance for bracketed root finding.
        ode_rtol: Relative tolerance of the spectral ODE integrator.
        quad_points: Gauss-Legendre points per lattice gap.
        quad_tol: Relative tolerance for adaptive quadrature.
        quad_max_refinements: Panel halvings before giving up.
        near_node_epsilon: Relative distance below which a point snaps to a
            lattice point.
        max_model_dimension: Largest dense matrix model accepted.

    Example:
        >>> Settings(threads=2).threads
        2
    """

    model_config = SettingsConfigDict(
        env_prefix="TVBAND_",
        case_sensitive=False,
        extra="ignore",
    )

    threads: int = Field(default_factory=_default_threads, ge=1)
    root_xtol: float = Field(default=1e-13, gt=0)
    ode_rtol: float = Field(default=1e-11, gt=0)
    quad_points: int = Field(default=32, ge=2)
    quad_tol: float = Field(default=1e-9, gt=0)
    quad_max_refinements: int = Field(default=8, ge=1)
    near_node_epsilon: float = Field(default=1e-13, ge=0)
    max_model_dimension: int = Field(default=512, ge=1)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    _load_env_files()
    return Settings()


def refresh_settings() -> Settings:
    """Drop the cached instance so environment changes are picked up."""
    get_settings.cache_clear()
    return get_settings()
