"""Unit tests for pair validation, normalization and Paley-Wiener truncations."""

import math

import numpy as np
import pytest

from tvband.application.core import (
    admissibility_sum,
    normalize_pair,
    paley_wiener_pair,
    require_normalized,
    require_valid,
    validate_pair,
)
from tvband.domain.errors import InvalidPairError, NotNormalizedError, ParameterError
from tvband.domain.models import BandlimitPair


@pytest.mark.unit
class TestValidatePair:
    """Tests for validate_pair and require_valid."""

    def test_valid_pair_has_no_violations(self) -> None:
        """A strictly increasing pair with positive weights is valid."""
        pair = BandlimitPair.from_sequences([-1.0, 0.0, 2.0], [1.0, 0.5, 2.0])
        assert validate_pair(pair) == []

    def test_monotonicity_violation_names_index(self) -> None:
        """A repeated node is reported at the spectral index of the offender."""
        pair = BandlimitPair.from_sequences([0.0, 1.0, 1.0, 2.0], [1.0] * 4, lo=5)
        violations = validate_pair(pair)
        assert [v.kind for v in violations] == ["monotonicity"]
        assert violations[0].index == 7
        assert "index 7" in violations[0].message

    def test_positivity_and_finiteness_reported_separately(self) -> None:
        """Each offending index produces its own violation."""
        pair = BandlimitPair.from_sequences(
            [0.0, 1.0, 2.0, 3.0],
            [1.0, -2.0, math.nan, 0.0],
        )
        kinds = sorted((v.kind, v.index) for v in validate_pair(pair))
        assert kinds == [("finiteness", 2), ("positivity", 1), ("positivity", 3)]

    def test_messages_show_plain_numbers(self) -> None:
        """Values print as Python floats, not numpy scalar reprs."""
        pair = BandlimitPair.from_sequences(
            [0.0, 1.5, 1.5, math.inf],
            [1.0, -2.5, 1.0, 1.0],
        )
        messages = [v.message for v in validate_pair(pair)]
        assert {v.kind for v in validate_pair(pair)} == {
            "finiteness",
            "positivity",
            "monotonicity",
        }
        assert all("np." not in message for message in messages)
        assert any("weight -2.5 must be strictly positive" in m for m in messages)
        assert any("node 1.5 does not strictly exceed node 1.5" in m for m in messages)

    def test_require_valid_raises(self) -> None:
        """require_valid turns violations into InvalidPairError."""
        pair = BandlimitPair.from_sequences([1.0, 0.0], [1.0, 1.0])
        with pytest.raises(InvalidPairError, match="index 1"):
            require_valid(pair)


@pytest.mark.unit
class TestNormalizePair:
    """Tests for normalize_pair and require_normalized."""

    def test_sum_becomes_pi(self) -> None:
        """Normalization rescales the admissibility sum to pi."""
        pair = BandlimitPair.from_sequences([-2.0, 0.5, 3.0], [0.7, 1.1, 4.0])
        normalized = normalize_pair(pair)
        assert normalized.normalized
        assert abs(admissibility_sum(normalized) - math.pi) <= 1e-12
        np.testing.assert_array_equal(normalized.nodes, pair.nodes)

    def test_scale_records_factor(self) -> None:
        """The applied factor is multiplied into ``scale``."""
        pair = BandlimitPair.from_sequences([0.0], [1.0])
        normalized = normalize_pair(pair)
        assert normalized.scale == pytest.approx(math.pi)
        np.testing.assert_allclose(normalized.weights, [math.pi])

    def test_idempotent(self) -> None:
        """Normalizing twice leaves the weights bit-identical."""
        once = normalize_pair(BandlimitPair.from_sequences([-1.0, 1.0], [2.0, 3.0]))
        twice = normalize_pair(once)
        np.testing.assert_array_equal(once.weights, twice.weights)
        assert twice.scale == once.scale

    def test_invalid_pair_rejected(self) -> None:
        """Invalid pairs cannot be normalized."""
        with pytest.raises(InvalidPairError):
            normalize_pair(BandlimitPair.from_sequences([0.0, 1.0], [1.0, 0.0]))

    def test_require_normalized_checks_sum(self) -> None:
        """A raw pair fails require_normalized even if flagged normalized."""
        pair = BandlimitPair.from_sequences([0.0, 1.0], [1.0, 1.0], normalized=True)
        with pytest.raises(NotNormalizedError):
            require_normalized(pair)
        assert require_normalized(normalize_pair(pair)) == pytest.approx(math.pi)


@pytest.mark.unit
class TestPaleyWienerPair:
    """Tests for the Paley-Wiener truncation."""

    def test_nodes_and_weights(self) -> None:
        """Nodes are n pi/A with a common weight before normalization."""
        pair = paley_wiener_pair(2.0, 3, normalize=False)
        np.testing.assert_allclose(pair.nodes, np.arange(-3, 4) * math.pi / 2.0)
        np.testing.assert_allclose(pair.weights, (math.pi / 2.0) * math.tanh(2.0))
        assert pair.indices.lo == -3
        assert pair.indices.hi == 3
        assert pair.truncation_of is not None
        assert pair.truncation_of.family == "paley-wiener"

    def test_truncation_nearly_normalized(self) -> None:
        """The renormalization factor tends to one as N grows."""
        pair = paley_wiener_pair(math.pi, 2000)
        assert pair.normalized
        assert abs(pair.scale - 1.0) < 1e-3

    @pytest.mark.parametrize(("bandwidth", "half_width"), [(0.0, 3), (-1.0, 3), (1.0, -1)])
    def test_bad_parameters(self, bandwidth: float, half_width: int) -> None:
        """Non-positive bandwidths and negative sizes are rejected."""
        with pytest.raises(ParameterError):
            paley_wiener_pair(bandwidth, half_width)
