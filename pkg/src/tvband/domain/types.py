"""Type aliases and constants for the domain layer."""

from collections.abc import Callable
from typing import Literal

import numpy as np
import numpy.typing as npt

# Index set kinds; only "finite" is materialized
IndexKind = Literal["finite", "non_negative", "non_positive", "all"]

# Analytic families a finite pair can truncate
PairFamily = Literal["paley-wiener"]

# Failure classes surfaced by verify reports
CheckStatus = Literal["pass", "fail"]

FloatArray = npt.NDArray[np.float64]
ComplexArray = npt.NDArray[np.complex128]

# A signal given as a function of time; must accept numpy arrays
SignalFunction = Callable[[FloatArray], npt.ArrayLike]

# Nodes closer than this (relative to 1+|t_n|) are treated as coincident
NODE_COINCIDENCE_RTOL = 1e-12

# Normalized pairs satisfy sum t'_n/(1+t_n^2) = pi within this tolerance
NORMALIZATION_TOL = 1e-12

# |theta - theta*| below this marks the lattice with a point at infinity
EXCEPTIONAL_THETA_TOL = 1e-10
