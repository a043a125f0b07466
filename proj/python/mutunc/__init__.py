"""Mutual and conditional uncertainty of quantum observables."""

from ._mutunc import (
    ConvergenceError,
    DimensionError,
    Error,
    ValidationError,
    bloch_vector,
    conditional_uncertainty,
    conditional_variance,
    correlation_tensor,
    covariance,
    detect,
    ky_fan_norm,
    mutual_uncertainty,
    named_state,
    partial_trace,
    pssv_closed_forms,
    reid_threshold,
    reproduce,
    std_dev,
    werner_minf,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
