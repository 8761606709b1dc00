"""
对角谐波矩阵的块编码: QFT · C · QFT，取数据高 m 位为 0 的块
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from ..circuit_core import Circuit, ResourceEstimate, naive_ledger
from ..estimator.cost_model import block_error, block_t_depth
from ..exceptions import CapExceededError, ValidationError
from ..harmonic_state import harmonic_target
from ..qft import build_approx_qft
from ..simulator import SynthesisModel, best_scalar_fit, block_of, spectral_norm
from .components import BlockEncodingReport
from .composite import build_circulant_circuit, circulant_alpha
from .lcu import remap

logger = logging.getLogger(__name__)

MAX_DIAG_QUBITS = 8
FORMULA_DELTA = 1e-10


def diag_harmonic_target(n: int) -> np.ndarray:
    """i·diag(|h⟩)"""
    return np.diag(1j * harmonic_target(n).amps)


def unit_norm_distance(block: np.ndarray, target: np.ndarray) -> float:
    """
    两者各自按谱范数归一化，在目标最大元素处对齐相位后的谱范数距离

    Raises:
        ValidationError: 形状不一致或任一矩阵为零
    """
    block = np.asarray(block, dtype=complex)
    target = np.asarray(target, dtype=complex)
    if block.shape != target.shape:
        raise ValidationError(f"形状不一致: {block.shape} vs {target.shape}")
    b_norm, t_norm = spectral_norm(block), spectral_norm(target)
    if b_norm == 0 or t_norm == 0:
        raise ValidationError("不能归一化零矩阵")
    b, t = block / b_norm, target / t_norm
    pivot = np.unravel_index(np.argmax(np.abs(t)), t.shape)
    if abs(b[pivot]) > 0:
        b = b * (t[pivot] / abs(t[pivot])) / (b[pivot] / abs(b[pivot]))
    return spectral_norm(b - t)


def predicted_diag_distance(n: int, m: int) -> float:
    """π/2^{n+m}"""
    return math.pi / 2.0 ** (n + m)


def build_diag_harmonic_circuit(n: int, m: int, delta0: Optional[float] = None,
                                delta1: Optional[float] = None) -> Circuit:
    """
    在 (n+m) 比特循环块编码两侧各加一个 (n+m) 比特正向 QFT

    Raises:
        CapExceededError: n + m 超过 8
        ValidationError: n < 1 或 m < 0
    """
    if n < 1 or m < 0:
        raise ValidationError(f"要求 n ≥ 1, m ≥ 0: n={n}, m={m}")
    total = n + m
    if total > MAX_DIAG_QUBITS:
        raise CapExceededError(f"对角谐波块编码要求 n + m ≤ {MAX_DIAG_QUBITS}: {total}")
    core = build_circulant_circuit(total, delta1)
    data = core.qubits("data")
    qft = remap(build_approx_qft(total, delta0).gates, dict(enumerate(data)))
    d0 = delta0 if delta0 is not None else FORMULA_DELTA
    d1 = delta1 if delta1 is not None else FORMULA_DELTA
    gates = qft + list(core.gates) + qft
    circuit = Circuit(core.width, core.registers, gates)
    ledger = ResourceEstimate.repeat_until_success(
        naive_ledger(circuit).t_count,
        block_t_depth(n, m, d0, d1),
        circulant_alpha(total) ** 2,
        clean_ancilla=len(core.qubits("select")) + len(core.qubits("ancilla")),
    )
    return circuit.with_ledger(ledger)


def build_diag_harmonic(n: int, m: int, delta0: Optional[float] = None, delta1: Optional[float] = None,
                        model: Optional[SynthesisModel] = None) -> Tuple[Circuit, BlockEncodingReport]:
    """
    构造 i·diag(|h⟩) 的块编码并报告单位范数距离

    Args:
        n (int): 数据比特数
        m (int): 额外比特数，块取这些高位为 0
        delta0 (Optional[float], optional): QFT 旋转精度. Defaults to None.
        delta1 (Optional[float], optional): 循环块编码旋转精度. Defaults to None.
        model (Optional[SynthesisModel], optional): 合成模型. Defaults to None.

    Returns:
        Tuple[Circuit, BlockEncodingReport]: 报告的 distance 为单位范数距离，精确模式下约为 π/2^{n+m}

    Examples:
        >>> _, report = build_diag_harmonic(2, 2)
        >>> report.distance < 2 * math.pi / 16
        True
    """
    circuit = build_diag_harmonic_circuit(n, m, delta0, delta1)
    data = circuit.qubits("data")
    ancilla = circuit.qubits("select") + circuit.qubits("ancilla") + data[:m]
    block = block_of(circuit, ancilla, model)
    target = diag_harmonic_target(n)
    scale, _ = best_scalar_fit(block, target)
    report = BlockEncodingReport(
        block=block,
        proportionality=scale,
        alpha=abs(scale) * spectral_norm(target),
        max_element=float(np.max(np.abs(block))),
        distance=unit_norm_distance(block, target),
    )
    logger.info("diag harmonic n=%d m=%d distance=%.3e (π/2^(n+m)=%.3e, model bound %.3e)",
                n, m, report.distance, predicted_diag_distance(n, m),
                block_error(n, m, delta0 or 0.0, delta1 or 0.0))
    return circuit, report
