"""Shared fixtures: seeded random normalized pairs and Paley-Wiener truncations."""

import math

import numpy as np
import pytest

from tvband.application.core import normalize_pair, paley_wiener_pair
from tvband.domain.models import BandlimitPair
from tvband.infrastructure.config.settings import refresh_settings

PAIR_SEED = 20240611
RANDOM_PAIR_COUNT = 20


def make_random_pair(rng: np.random.Generator, size: int) -> BandlimitPair:
    """Normalized pair with well-separated nodes and moderate weights."""
    gaps = rng.uniform(0.4, 2.0, size)
    nodes = np.cumsum(gaps) - rng.uniform(0.3, 0.7) * gaps.sum()
    weights = rng.uniform(0.3, 3.0, size)
    lo = int(rng.integers(-3, 3))
    return normalize_pair(BandlimitPair.from_sequences(nodes, weights, lo=lo))


def random_pairs(count: int = RANDOM_PAIR_COUNT, seed: int = PAIR_SEED) -> list[BandlimitPair]:
    rng = np.random.default_rng(seed)
    return [make_random_pair(rng, int(rng.integers(3, 9))) for _ in range(count)]


def non_exceptional(pair: BandlimitPair, thetas: tuple[float, ...]) -> list[float]:
    from tvband.application.charfun import exceptional_theta

    theta_star = exceptional_theta(pair)
    return [theta for theta in thetas if abs(theta - theta_star) > 1e-6]


@pytest.fixture(autouse=True)
def isolated_user_config(tmp_path_factory: pytest.TempPathFactory, monkeypatch: pytest.MonkeyPatch):
    """Keep user defaults and settings out of the developer's home directory."""
    monkeypatch.setenv("TVBAND_CONFIG_DIR", str(tmp_path_factory.mktemp("tvband-config")))
    monkeypatch.setenv("TVBAND_ENV_FILE", str(tmp_path_factory.mktemp("env") / "missing.env"))
    monkeypatch.setenv("TVBAND_THREADS", "2")
    monkeypatch.setenv("TVBAND_LOG_DIR", str(tmp_path_factory.mktemp("logs")))
    refresh_settings()
    yield
    monkeypatch.undo()
    refresh_settings()


@pytest.fixture(scope="session")
def pairs() -> list[BandlimitPair]:
    """Twenty seeded random normalized pairs with 3 to 8 nodes."""
    return random_pairs()


@pytest.fixture(scope="session")
def six_node_pair() -> BandlimitPair:
    rng = np.random.default_rng(PAIR_SEED + 6)
    return make_random_pair(rng, 6)


@pytest.fixture(scope="session")
def pw_pair() -> BandlimitPair:
    """Paley-Wiener A = pi truncated to |n| <= 400."""
    return paley_wiener_pair(math.pi, 400)


@pytest.fixture(scope="session")
def pw_pair_small() -> BandlimitPair:
    return paley_wiener_pair(math.pi, 40)
