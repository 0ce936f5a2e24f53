"""Pair handling and the lattice evaluator shared by every computation."""

from tvband.application.core.lattice import Lattice, LocalSums
from tvband.application.core.pairs import (
    admissibility_sum,
    normalize_pair,
    paley_wiener_pair,
    require_normalized,
    require_valid,
    validate_pair,
)

__all__ = [
    "Lattice",
    "LocalSums",
    "admissibility_sum",
    "normalize_pair",
    "paley_wiener_pair",
    "require_normalized",
    "require_valid",
    "validate_pair",
]
