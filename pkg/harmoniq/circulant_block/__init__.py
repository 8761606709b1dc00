"""
线性循环矩阵 C 与对角谐波矩阵的块编码
"""

from .targets import ConvolutionReport, SELECTORS, centered_index, convolution_check, r_ratio, target_matrix
from .components import (
    COMPONENTS,
    BlockEncodingReport,
    build_component_circuit,
    build_component_encoding,
    component_ancilla,
    extract_block,
)
from .composite import (
    TERMS,
    analytic_weights,
    build_circulant_circuit,
    build_circulant_encoding,
    circulant_alpha,
    decomposition_weights,
    diag_l_closed_form_check,
    linear_circulant_unit,
    mean_block_error,
    perturbed_block_error,
    predicted_block_error,
    solve_lcu_weights,
    term_circuit,
)
from .diag_harmonic import (
    build_diag_harmonic,
    build_diag_harmonic_circuit,
    diag_harmonic_target,
    predicted_diag_distance,
    unit_norm_distance,
)

__all__ = [
    "SELECTORS",
    "ConvolutionReport",
    "centered_index",
    "convolution_check",
    "r_ratio",
    "target_matrix",
    "COMPONENTS",
    "BlockEncodingReport",
    "build_component_circuit",
    "build_component_encoding",
    "component_ancilla",
    "extract_block",
    "TERMS",
    "analytic_weights",
    "build_circulant_circuit",
    "build_circulant_encoding",
    "circulant_alpha",
    "decomposition_weights",
    "diag_l_closed_form_check",
    "linear_circulant_unit",
    "mean_block_error",
    "perturbed_block_error",
    "predicted_block_error",
    "solve_lcu_weights",
    "term_circuit",
    "build_diag_harmonic",
    "build_diag_harmonic_circuit",
    "diag_harmonic_target",
    "predicted_diag_distance",
    "unit_norm_distance",
]
