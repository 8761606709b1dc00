"""
无误差旋转态小部件、指数态准备与重复直到成功统计
"""

from .widget import WidgetSpec, build_widget, simulate_widget
from .rus import (
    RusEstimate,
    exact_parallel_depth,
    expected_tdepth_mc,
    rus_depth_fit,
    single_ancilla_estimate,
    widget_tradeoff,
)
from .exponential import (
    ExponentialProgram,
    ExponentialResult,
    ExponentialSpec,
    build_exponential,
    exponential_target,
)

__all__ = [
    "WidgetSpec",
    "build_widget",
    "simulate_widget",
    "ExponentialSpec",
    "ExponentialProgram",
    "ExponentialResult",
    "build_exponential",
    "exponential_target",
    "RusEstimate",
    "expected_tdepth_mc",
    "exact_parallel_depth",
    "rus_depth_fit",
    "single_ancilla_estimate",
    "widget_tradeoff",
]
