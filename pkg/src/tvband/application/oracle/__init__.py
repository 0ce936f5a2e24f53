"""Dense matrix model of the pair's symmetric operator and its cross checks."""

from tvband.application.oracle.model import (
    ExtensionSpectrum,
    MatrixModel,
    build_model,
    extension_spectrum,
    inverse_cayley,
    oracle_weights,
    unitary_extension,
)
from tvband.application.oracle.verify import run_verification

__all__ = [
    "ExtensionSpectrum",
    "MatrixModel",
    "build_model",
    "extension_spectrum",
    "inverse_cayley",
    "oracle_weights",
    "run_verification",
    "unitary_extension",
]
