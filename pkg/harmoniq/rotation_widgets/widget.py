"""
无误差旋转态小部件

H 作用在控制位上，再从控制位向 k 个新辅助位扇出受控 H。全部辅助位测得 0 时，
控制位处于 √(2^k/(2^k+1))·(|0⟩ + 2^{-k/2}|1⟩)，成功概率 1/2 + 2^{-(k+1)}。
共享控制位的 CH 可并行执行，T 深度为 2。
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..circuit_core import Circuit, CircuitBuilder, Register, ResourceEstimate, cost_of_gate
from ..config import WIDGET_SIM_CAP
from ..exceptions import ValidationError
from ..simulator import StateVector, postselect, run

logger = logging.getLogger(__name__)

MAX_WIDGET_K = 20
WIDGET_T_DEPTH = 2.0


@dataclass(frozen=True)
class WidgetSpec:
    """
    小部件规格

    Attributes:
        k (int): 振幅比指数，|1⟩/|0⟩ = 2^{-k/2}
    """

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValidationError(f"小部件要求 k ≥ 1: {self.k}")

    @property
    def qubits(self) -> int:
        return self.k + 1

    @property
    def success_prob(self) -> float:
        return 0.5 + 0.5 * 2.0 ** (-min(self.k, 2000))

    @property
    def ratio(self) -> float:
        return 2.0 ** (-self.k / 2)

    def target_state(self) -> StateVector:
        """√(2^k/(2^k+1))·(|0⟩ + 2^{-k/2}|1⟩)"""
        return StateVector.from_amplitudes([1.0, self.ratio])


def build_widget(k: int) -> Circuit:
    """
    构造 k 小部件电路

    Args:
        k (int): 1 ≤ k ≤ 20

    Returns:
        Circuit: 寄存器 control(1) 与 widget(k, persistent)；账本 T 深度 2

    Raises:
        ValidationError: k 越界

    Examples:
        >>> build_widget(3).ledger.t_depth
        2.0
    """
    if not 1 <= k <= MAX_WIDGET_K:
        raise ValidationError(f"k 必须在 [1, {MAX_WIDGET_K}] 内: {k}")
    spec = WidgetSpec(k)
    builder = CircuitBuilder([Register("control", 0, 1), Register("widget", 1, k, "persistent")])
    builder.h(0)
    for target in builder.qubits("widget"):
        builder.ch(0, target)
    t_count = k * cost_of_gate("CH")[0]
    ledger = ResourceEstimate.repeat_until_success(
        t_count, WIDGET_T_DEPTH, spec.success_prob, persistent_ancilla=k
    )
    return builder.build(ledger)


def simulate_widget(k: int) -> Tuple[StateVector, float]:
    """
    模拟小部件并后选择辅助位全 0

    k 超过模拟上限时直接返回解析结果。

    Returns:
        Tuple[StateVector, float]: (控制位上的单比特态, 成功概率)
    """
    spec = WidgetSpec(k)
    if k > WIDGET_SIM_CAP:
        logger.debug("widget k=%d above simulation cap, using closed form", k)
        return spec.target_state(), spec.success_prob
    circuit = build_widget(k)
    state = run(circuit)
    return postselect(state, circuit.qubits("widget"), 0, keep=False)


def widget_ratio_exponent(weight: int, beta: float) -> int:
    """权重为 weight 的比特所需的 k = weight·2·log₂(1/β)"""
    k = weight * 2 * math.log2(1 / beta)
    if not np.isclose(k, round(k)):
        raise ValidationError(f"β={beta} 不能由整数 k 的小部件实现")
    return int(round(k))
