"""
线性态 |L⟩ 的精确准备、SELECT-Z 预言机与约化
"""

from .select_z import build_select_z, is_power_of_two, select_width
from .linear_state import (
    LinearPreparation,
    LinearProgram,
    LinearResult,
    apply_correction,
    build_linear,
    build_linear_core,
    correction_pattern,
    linear_expected_t_depth,
    linear_quoted_ancilla,
    linear_target,
    prepare_linear_state,
    reduce_linear,
    reduction_failure_estimate,
    reduction_failure_exact,
)

__all__ = [
    "build_select_z",
    "is_power_of_two",
    "select_width",
    "LinearPreparation",
    "LinearProgram",
    "LinearResult",
    "apply_correction",
    "build_linear",
    "build_linear_core",
    "correction_pattern",
    "linear_expected_t_depth",
    "linear_quoted_ancilla",
    "linear_target",
    "prepare_linear_state",
    "reduce_linear",
    "reduction_failure_estimate",
    "reduction_failure_exact",
]
