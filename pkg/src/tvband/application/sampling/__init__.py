"""Sampling, reconstruction and time-varying low-pass filtering."""

from tvband.application.sampling.interpolation import interpolate
from tvband.application.sampling.lowpass import LowpassResult, lowpass_project
from tvband.application.sampling.nyquist import nyquist_comparison
from tvband.application.sampling.signals import (
    evaluate_signal,
    l2_norm_on_grid,
    max_abs_error,
    reconstruct,
    sample_energy,
    sample_signal,
)

__all__ = [
    "LowpassResult",
    "evaluate_signal",
    "interpolate",
    "l2_norm_on_grid",
    "lowpass_project",
    "max_abs_error",
    "nyquist_comparison",
    "reconstruct",
    "sample_energy",
    "sample_signal",
]
