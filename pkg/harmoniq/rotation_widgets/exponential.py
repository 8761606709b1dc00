"""
指数态 |e_β⟩ ∝ Σ β^x |x⟩ 的准备

每个比特由一个小部件独立地重复直到成功；成功后数据寄存器就是各比特态的张量积。
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from ..circuit_core import Circuit, ResourceEstimate
from ..config import DEFAULT_SEED, WIDGET_SIM_CAP
from ..exceptions import ValidationError
from ..simulator import StateVector
from .rus import rus_depth_fit
from .widget import WidgetSpec, build_widget, simulate_widget, widget_ratio_exponent

logger = logging.getLogger(__name__)

SUPPORTED_BASES = (0.5, 1 / math.sqrt(2))
MAX_EXPONENTIAL_QUBITS = 8


def exponential_target(a: int, beta: float) -> StateVector:
    """解析目标 |e_β⟩"""
    return StateVector.from_amplitudes(beta ** np.arange(2 ** a, dtype=float))


@dataclass(frozen=True)
class ExponentialSpec:
    """
    指数态规格

    Attributes:
        a (int): 数据比特数
        beta (float): 底数，1/2 或 1/√2
    """

    a: int
    beta: float = 0.5
    widgets: Tuple[WidgetSpec, ...] = field(init=False)

    def __post_init__(self) -> None:
        if not 0 <= self.a <= MAX_EXPONENTIAL_QUBITS:
            raise ValidationError(f"a 必须在 [0, {MAX_EXPONENTIAL_QUBITS}] 内: {self.a}")
        if not any(np.isclose(self.beta, b) for b in SUPPORTED_BASES):
            raise ValidationError(f"不支持的底数 β={self.beta}, 只支持 1/2 与 1/√2")
        # 大端序: 比特 i 的权重为 2^{a-1-i}
        widgets = tuple(
            WidgetSpec(widget_ratio_exponent(2 ** (self.a - 1 - i), self.beta)) for i in range(self.a)
        )
        object.__setattr__(self, "widgets", widgets)

    @property
    def widget_ancilla(self) -> int:
        """按比特权重规则得到的小部件辅助比特总数 Σ k_i"""
        return sum(w.k for w in self.widgets)

    @property
    def quoted_ancilla(self) -> int:
        """引用的 4N−4 计数（N = 2^a）"""
        return 4 * 2 ** self.a - 4


@dataclass
class ExponentialResult:
    """一次重复直到成功的执行结果"""

    state: StateVector
    attempts: List[int]
    success_probs: List[float]

    @property
    def t_depth(self) -> float:
        return 2.0 * max(self.attempts, default=0)


@dataclass
class ExponentialProgram:
    """
    逐比特可独立重复的小部件程序

    Attributes:
        spec (ExponentialSpec): 规格
        circuits (List[Optional[Circuit]]): 每个比特的小部件电路（超过模拟上限时为 None）
        ledger (ResourceEstimate): 期望 T 深度取并行重复的拟合 2log₂(5a/2+0.92)
    """

    spec: ExponentialSpec
    circuits: List[Optional[Circuit]]
    ledger: ResourceEstimate

    def prepare(self, seed: int = DEFAULT_SEED) -> ExponentialResult:
        """
        执行程序: 逐个模拟小部件并按其成功概率抽样重复次数

        Returns:
            ExponentialResult: 数据寄存器态（大端序张量积）与每个比特的尝试次数
        """
        rng = np.random.default_rng(seed)
        state = StateVector(0, np.array([1.0 + 0j]))
        attempts, probs = [], []
        for widget in self.spec.widgets:
            bit_state, p = simulate_widget(widget.k)
            state = state.tensor(bit_state)
            attempts.append(int(rng.geometric(p)))
            probs.append(p)
        logger.debug("exponential a=%d attempts=%s", self.spec.a, attempts)
        return ExponentialResult(state, attempts, probs)


def build_exponential(spec: ExponentialSpec) -> ExponentialProgram:
    """
    构造 |e_β⟩ 的小部件程序

    Args:
        spec (ExponentialSpec): 规格（a ≤ 8）

    Returns:
        ExponentialProgram: 程序；所有小部件成功后数据寄存器为 |e_β⟩

    Examples:
        >>> program = build_exponential(ExponentialSpec(1, 0.5))
        >>> program.prepare().state.amps.real
        array([0.89442719, 0.4472136 ])
    """
    circuits = [build_widget(w.k) if w.k <= WIDGET_SIM_CAP else None for w in spec.widgets]
    t_count = sum(2.0 * w.k for w in spec.widgets)
    depth = rus_depth_fit(spec.a) if spec.a else 0.0
    ledger = ResourceEstimate(
        t_count=t_count,
        t_depth=2.0 if spec.a else 0.0,
        expected_t_depth=depth,
        persistent_ancilla=spec.widget_ancilla,
    )
    return ExponentialProgram(spec, circuits, ledger)
