"""
暴力酉矩阵提取、块提取与距离
"""

import logging
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from ..circuit_core.circuit import Circuit
from ..config import BLOCK_COLUMN_CAP, BLOCK_QUBIT_CAP, UNITARY_QUBIT_CAP
from ..exceptions import CapExceededError, ValidationError
from .statevector import StateVector, SynthesisModel, run_batch

logger = logging.getLogger(__name__)

UNITARITY_TOLERANCE = 1e-10
BATCH_AMPLITUDES = 2 ** 22


def unitary_of(circuit: Circuit, model: Optional[SynthesisModel] = None,
               cap: int = UNITARY_QUBIT_CAP) -> np.ndarray:
    """
    逐列执行电路得到其酉矩阵

    Args:
        circuit (Circuit): 电路
        model (Optional[SynthesisModel]): 合成模型，默认精确
        cap (int, optional): 量子比特上限. Defaults to 14.

    Returns:
        np.ndarray: 2^q × 2^q 复矩阵，第 j 列为 run(circuit, |j⟩)

    Raises:
        CapExceededError: 超过上限
    """
    if circuit.width > cap:
        raise CapExceededError(f"酉矩阵提取上限 {cap} 个量子比特, 电路宽度 {circuit.width}")
    dim = 2 ** circuit.width
    return run_batch(circuit, np.eye(dim, dtype=complex), model)


def is_unitary(matrix: np.ndarray, tol: float = UNITARITY_TOLERANCE) -> bool:
    """‖U†U − I‖_max ≤ tol"""
    dim = matrix.shape[0]
    return float(np.max(np.abs(matrix.conj().T @ matrix - np.eye(dim)))) <= tol


def _register_index(width: int, qubits: Sequence[int], value: int) -> np.ndarray:
    """在给定寄存器取值 value 且其余比特取遍时的全局索引"""
    qubits = list(qubits)
    rest = [q for q in range(width) if q not in qubits]
    indices = np.zeros(2 ** len(rest), dtype=np.int64)
    for j in range(2 ** len(rest)):
        x = 0
        for pos, q in enumerate(rest):
            if (j >> (len(rest) - 1 - pos)) & 1:
                x |= 1 << (width - 1 - q)
        for pos, q in enumerate(qubits):
            if (value >> (len(qubits) - 1 - pos)) & 1:
                x |= 1 << (width - 1 - q)
        indices[j] = x
    return indices


def block_of(circuit: Circuit, ancilla_qubits: Sequence[int],
             model: Optional[SynthesisModel] = None, ancilla_value: int = 0) -> np.ndarray:
    """
    提取左上块 ⟨anc=0| U |anc=0⟩（行列按其余比特的大端序排列）

    Args:
        circuit (Circuit): 电路
        ancilla_qubits (Sequence[int]): 被投影的辅助比特
        model (Optional[SynthesisModel]): 合成模型
        ancilla_value (int, optional): 投影的辅助寄存器取值. Defaults to 0.

    Returns:
        np.ndarray: 数据维度的方块

    Raises:
        CapExceededError: 总比特数或列数超限
    """
    if circuit.width > BLOCK_QUBIT_CAP:
        raise CapExceededError(f"块提取上限 {BLOCK_QUBIT_CAP} 个量子比特, 电路宽度 {circuit.width}")
    index = _register_index(circuit.width, ancilla_qubits, ancilla_value)
    if index.size > BLOCK_COLUMN_CAP:
        raise CapExceededError(f"块提取最多 {BLOCK_COLUMN_CAP} 列, 需要 {index.size}")
    dim = 2 ** circuit.width
    # 每批最多 2^22 个振幅；同一模型每次调用重放同一扰动实例
    chunk = max(1, BATCH_AMPLITUDES // dim)
    block = np.empty((index.size, index.size), dtype=complex)
    for start in range(0, index.size, chunk):
        cols = index[start:start + chunk]
        columns = np.zeros((dim, cols.size), dtype=complex)
        columns[cols, np.arange(cols.size)] = 1.0
        block[:, start:start + cols.size] = run_batch(circuit, columns, model)[index, :]
    logger.debug("extracted %d-column block from width-%d circuit", index.size, circuit.width)
    return block


def spectral_norm(matrix: np.ndarray) -> float:
    """谱范数（最大奇异值）"""
    return float(np.linalg.norm(np.asarray(matrix), 2))


def distance(a: Union[StateVector, np.ndarray], b: Union[StateVector, np.ndarray],
             norm: str = "spectral", phase_invariant: bool = True) -> float:
    """
    态或矩阵之间的距离

    态: min_φ ‖a − e^{iφ} b‖（phase_invariant=False 时不优化相位）；
    矩阵: 差的谱范数（norm="spectral"）或最大元素模（norm="max"）。

    Raises:
        ValidationError: 形状不一致

    Examples:
        >>> distance(StateVector.zero(1), StateVector.basis(1, 1))
        1.4142135623730951
    """
    va = a.amps if isinstance(a, StateVector) else np.asarray(a, dtype=complex)
    vb = b.amps if isinstance(b, StateVector) else np.asarray(b, dtype=complex)
    if va.shape != vb.shape:
        raise ValidationError(f"形状不一致: {va.shape} vs {vb.shape}")
    if va.ndim == 1:
        if not phase_invariant:
            return float(np.linalg.norm(va - vb))
        # 对齐相位后直接求差，避免 ⟨a|a⟩+⟨b|b⟩−2|⟨a|b⟩| 的相消
        phase = np.angle(np.vdot(vb, va))
        return float(np.linalg.norm(va - np.exp(1j * phase) * vb))
    diff = va - vb
    if norm == "spectral":
        return spectral_norm(diff)
    if norm == "max":
        return float(np.max(np.abs(diff)))
    raise ValidationError(f"未知的范数: {norm}")


def best_scalar_fit(block: np.ndarray, target: np.ndarray) -> Tuple[complex, float]:
    """
    最小二乘拟合 block ≈ λ·target

    Returns:
        Tuple[complex, float]: (λ, 相对残差 ‖block − λ·target‖₂ / ‖block‖₂)
    """
    target = np.asarray(target, dtype=complex)
    denom = np.vdot(target, target)
    if abs(denom) == 0:
        raise ValidationError("目标矩阵为零")
    scale = complex(np.vdot(target, block) / denom)
    size = spectral_norm(block)
    residual = spectral_norm(block - scale * target) / size if size > 0 else 0.0
    return scale, residual
