"""
稠密态矢量模拟器与暴力酉矩阵预言机

用于验证每一个构造。
"""

from .statevector import (
    StateVector,
    SynthesisModel,
    outcome_probabilities,
    postselect,
    run,
    run_batch,
)
from .oracle import best_scalar_fit, block_of, distance, is_unitary, spectral_norm, unitary_of

__all__ = [
    "StateVector",
    "SynthesisModel",
    "run",
    "run_batch",
    "postselect",
    "outcome_probabilities",
    "unitary_of",
    "block_of",
    "is_unitary",
    "distance",
    "spectral_norm",
    "best_scalar_fit",
]
