"""
精确 QFT、近似 QFT 电路与合成误差测量
"""

from .exact import (
    exact_qft,
    linear_circulant,
    linear_circulant_norm,
    linear_spectrum,
    qft_state,
    qft_vector,
)
from .approximate import build_approx_qft, qft_ledger, qft_t_count, qft_t_depth, synthesized_rotation_count
from .error_fits import (
    CONJUGATION_ERROR_BAND,
    STATE_ERROR_BAND,
    ErrorMeasurement,
    conjugation_band,
    measure_conjugation_error,
    measure_state_error,
    predicted_conjugation_error,
    predicted_state_error,
)

__all__ = [
    "exact_qft",
    "linear_circulant",
    "linear_circulant_norm",
    "linear_spectrum",
    "qft_state",
    "qft_vector",
    "build_approx_qft",
    "qft_ledger",
    "qft_t_count",
    "qft_t_depth",
    "synthesized_rotation_count",
    "CONJUGATION_ERROR_BAND",
    "STATE_ERROR_BAND",
    "ErrorMeasurement",
    "conjugation_band",
    "measure_state_error",
    "measure_conjugation_error",
    "predicted_state_error",
    "predicted_conjugation_error",
]
