"""
四个分量（𝟏、diag{L}、D、X^{⊗n}）以及 Grover 矩阵与 R 的块编码

每个电路的寄存器为 ancilla（若有）与 data，块取 ancilla = |0…0⟩。
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..circuit_core import Circuit, CircuitBuilder, Register, ResourceEstimate, cost_of_gate, rotation_t_cost
from ..estimator.cost_model import circulant_items
from ..exceptions import CapExceededError, ValidationError
from ..linear_prep import select_width
from ..simulator import SynthesisModel, best_scalar_fit, block_of, spectral_norm
from .lcu import add_grover, add_ones, add_state_prep, index_bits, inverse_gates, state_prep_gates
from .targets import r_ratio, target_matrix

logger = logging.getLogger(__name__)

COMPONENTS = ("ONES", "DIAG_L", "D", "XN", "GROVER", "R")
MAX_COMPONENT_QUBITS = 8
# 公式模式使用的 δ（不合成时）
FORMULA_DELTA = 1e-10


@dataclass
class BlockEncodingReport:
    """
    块编码报告

    Attributes:
        block (np.ndarray): 左上块（数据维度）
        proportionality (complex): block ≈ proportionality·target
        alpha (float): 相对单位谱范数目标的子归一化
        max_element (float): 块中最大元素模
        distance (float): 最佳标量拟合后的相对残差
    """

    block: np.ndarray
    proportionality: complex
    alpha: float
    max_element: float
    distance: float

    def to_dict(self) -> Dict[str, object]:
        return {
            "proportionality": [self.proportionality.real, self.proportionality.imag],
            "alpha": self.alpha,
            "max_element": self.max_element,
            "distance": self.distance,
        }


def report_for(block: np.ndarray, target: np.ndarray) -> BlockEncodingReport:
    """相对目标矩阵生成报告"""
    scale, residual = best_scalar_fit(block, target)
    return BlockEncodingReport(
        block=block,
        proportionality=scale,
        alpha=abs(scale) * spectral_norm(target),
        max_element=float(np.max(np.abs(block))),
        distance=residual,
    )


def component_ancilla(which: str, n: int) -> int:
    """各分量需要的辅助比特数"""
    a = select_width(n)
    return {"ONES": 1, "DIAG_L": a, "D": a + 2, "XN": 0, "GROVER": 0, "R": 1}[which]


def _registers(ancilla: int, n: int) -> List[Register]:
    regs = [Register("data", ancilla, n)]
    if ancilla:
        regs.insert(0, Register("ancilla", 0, ancilla, "clean"))
    return regs


def _r_angle(n: int) -> float:
    """cos(θ/2) = 1/r"""
    return 2.0 * math.acos(1.0 / r_ratio(n))


def add_r_block(builder: CircuitBuilder, ancilla: int, qubit: int, n: int,
                delta: Optional[float] = None) -> CircuitBuilder:
    """R/r = diag(1/r, −1): 数据位为 0 时旋转辅助位，数据位为 1 时取负号"""
    with builder.controlled_on([qubit], [0]):
        builder.ry(ancilla, _r_angle(n), delta)
    return builder.z(qubit)


def _lcu_amplitudes(weights: np.ndarray, width: int) -> np.ndarray:
    padded = np.zeros(2 ** width)
    padded[:weights.size] = weights
    return np.sqrt(padded / padded.sum())


def _diag_l(builder: CircuitBuilder, select: List[int], data: List[int], delta: Optional[float]) -> None:
    n = len(data)
    amps = _lcu_amplitudes(2.0 ** np.arange(n), len(select))
    prep = state_prep_gates(builder.registers, select, amps, delta)
    builder.extend(prep)
    for k in range(n):
        with builder.controlled_on(select, index_bits(k, len(select))):
            builder.z(data[n - 1 - k])
    builder.extend(inverse_gates(prep))


def _d_matrix(builder: CircuitBuilder, anc: List[int], data: List[int], delta: Optional[float]) -> None:
    n = len(data)
    a = len(anc) - 2
    select, r_anc, g_anc = anc[:a], anc[a], anc[a + 1]
    amps = _lcu_amplitudes(2.0 ** (n - 1 - np.arange(n)), a)
    prep = state_prep_gates(builder.registers, select, amps, delta)
    builder.extend(prep)
    for k in range(n):
        with builder.controlled_on(select, index_bits(k, a)):
            for q in data[:k]:
                builder.x(q)
            add_r_block(builder, r_anc, data[k], n, delta)
            if k < n - 1:
                add_ones(builder, g_anc, data[k + 1:])
    builder.extend(inverse_gates(prep))


def component_ledger(which: str, n: int, delta: Optional[float]) -> ResourceEstimate:
    """按逐算子的引用 T 深度标注分量账本"""
    d = delta if delta is not None else FORMULA_DELTA
    a = select_width(n)
    if which == "ONES":
        depth = circulant_items(max(n, 2), d)["controlled_grover"]
    elif which == "DIAG_L":
        depth = 2.0 * a * rotation_t_cost(d) + 4.0 * a
    elif which == "D":
        h_op = 4.0 * a - 2.0 if a else 0.0
        depth = circulant_items(max(n, 2), d)["double_controlled_r"] + 2 * h_op + (8.0 * n - 12.0 if n > 1 else 0.0) + 4.0 * a
    elif which == "GROVER":
        depth = cost_of_gate("MCX", width=n)[1]
    elif which == "R":
        depth = cost_of_gate("CRy", d)[1]
    else:
        depth = 0.0
    return ResourceEstimate.deterministic(depth, depth, clean_ancilla=component_ancilla(which, n))


def build_component_circuit(which: str, n: int, delta: Optional[float] = None) -> Circuit:
    """
    构造单个分量的块编码电路

    Raises:
        ValidationError: 未知分量
        CapExceededError: n 超出范围
    """
    if which not in COMPONENTS:
        raise ValidationError(f"未知分量 {which}, 可选: {COMPONENTS}")
    if not 1 <= n <= MAX_COMPONENT_QUBITS:
        raise CapExceededError(f"分量要求 1 ≤ n ≤ {MAX_COMPONENT_QUBITS}: {n}")
    width = 1 if which == "R" else n
    ancilla = component_ancilla(which, n)
    builder = CircuitBuilder(_registers(ancilla, width))
    anc = list(builder.qubits("ancilla")) if ancilla else []
    data = list(builder.qubits("data"))
    if which == "ONES":
        add_ones(builder, anc[0], data)
    elif which == "DIAG_L":
        _diag_l(builder, anc, data, delta)
    elif which == "D":
        _d_matrix(builder, anc, data, delta)
    elif which == "XN":
        for q in data:
            builder.x(q)
    elif which == "GROVER":
        add_grover(builder, data)
    else:
        add_r_block(builder, anc[0], data[0], n, delta)
    return builder.build(component_ledger(which, n, delta))


def extract_block(circuit: Circuit, model: Optional[SynthesisModel] = None) -> np.ndarray:
    """取 ancilla = 0 的块；没有辅助比特时就是整个酉矩阵"""
    names = [r.name for r in circuit.registers]
    ancilla = circuit.qubits("ancilla") if "ancilla" in names else ()
    return block_of(circuit, ancilla, model)


def build_component_encoding(which: str, n: int, delta: Optional[float] = None,
                             model: Optional[SynthesisModel] = None) -> Tuple[Circuit, BlockEncodingReport]:
    """
    构造分量块编码并与目标矩阵比较

    块与目标的比例: ONES 为 1/N，DIAG_L 为 1，D 为 1/(N+1)，XN 为 1，GROVER 为 −1（全局相位），R 为 1/r。

    Args:
        which (str): ONES、DIAG_L、D、XN、GROVER 或 R
        n (int): 数据比特数（R 的 n 只决定 N）
        delta (Optional[float], optional): 旋转合成精度. Defaults to None.
        model (Optional[SynthesisModel], optional): 合成模型. Defaults to None.

    Returns:
        Tuple[Circuit, BlockEncodingReport]: 电路与报告

    Examples:
        >>> _, report = build_component_encoding("ONES", 3)
        >>> round(abs(report.proportionality) * 8, 12)
        1.0
    """
    circuit = build_component_circuit(which, n, delta)
    block = extract_block(circuit, model)
    report = report_for(block, target_matrix(which, n))
    logger.debug("component %s n=%d residual=%.3e", which, n, report.distance)
    return circuit, report
