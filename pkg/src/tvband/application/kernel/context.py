"""Evaluation context for the local bandlimit kernel."""

from __future__ import annotations

from dataclasses import dataclass

from tvband.application.core.lattice import Lattice
from tvband.application.spectral.phase import pair_lattice
from tvband.application.spectral.sequences import lattice_for
from tvband.domain.errors import ParameterError
from tvband.domain.models import BandlimitPair
from tvband.infrastructure.config.settings import get_settings


@dataclass(frozen=True, slots=True, eq=False)
class KernelContext:
    """A normalized pair with the alpha lattice used to represent its kernel.

    Attributes:
        pair: Normalized bandlimit pair.
        alpha: Representation level in [0, 1); the kernel does not depend on it.
        near_node_epsilon: Relative distance at which points snap to the
            alpha lattice.
        lattice: Points t_k(alpha) with weights t'(k + alpha).
        phase_lattice: Node lattice used for tau and tau'.
    """

    pair: BandlimitPair
    alpha: float
    near_node_epsilon: float
    lattice: Lattice
    phase_lattice: Lattice

    @classmethod
    def create(
        cls,
        pair: BandlimitPair,
        alpha: float = 0.0,
        near_node_epsilon: float | None = None,
    ) -> KernelContext:
        """Build a context, solving for the alpha lattice when alpha != 0.

        Raises:
            NotNormalizedError: If the pair is not normalized.
            SingularParameterError: If alpha is the exceptional level.
        """
        if near_node_epsilon is None:
            near_node_epsilon = get_settings().near_node_epsilon
        if near_node_epsilon < 0:
            raise ParameterError(
                f"near-node epsilon must be non-negative, got {near_node_epsilon!r}",
            )
        phase_lattice = pair_lattice(pair)
        lattice = lattice_for(pair, alpha)
        return cls(pair, alpha, near_node_epsilon, lattice, phase_lattice)
