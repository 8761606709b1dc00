"""
谐波序列态 |h⟩ 的准备流水线、解析目标与资源优化
"""

from .targets import (
    VARIANTS,
    cotangent_target,
    harmonic_target,
    lemma_distance,
    predicted_distance,
    required_ancilla,
    required_total_qubits,
    second_asymptote_target,
)
from .pipeline import (
    COMBINING_PHASE,
    HarmonicProgram,
    HarmonicResult,
    amendment_is_permutation,
    asymptote_states,
    build_amendment,
    build_harmonic,
    calibrate_combining_phase,
)
from ..estimator.optimizers import StateOptimum, optimize_state

__all__ = [
    "VARIANTS",
    "cotangent_target",
    "harmonic_target",
    "lemma_distance",
    "predicted_distance",
    "required_ancilla",
    "required_total_qubits",
    "second_asymptote_target",
    "COMBINING_PHASE",
    "HarmonicProgram",
    "HarmonicResult",
    "amendment_is_permutation",
    "asymptote_states",
    "build_amendment",
    "build_harmonic",
    "calibrate_combining_phase",
    "StateOptimum",
    "optimize_state",
]
