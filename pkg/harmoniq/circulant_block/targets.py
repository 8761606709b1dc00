"""
目标矩阵与卷积定理检查
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..exceptions import CapExceededError, ValidationError
from ..qft import exact_qft, linear_circulant

logger = logging.getLogger(__name__)

SELECTORS = ("CIRCULANT", "ONES", "DIAG_L", "D", "XN", "GROVER", "R")
MAX_TARGET_QUBITS = 10
MAX_CONVOLUTION_QUBITS = 4


def centered_index(n: int) -> np.ndarray:
    """ℓ̃_i = (N−1)/2 − i"""
    size = 2 ** n
    return (size - 1) / 2.0 - np.arange(size, dtype=float)


def r_ratio(n: int) -> float:
    """r = (N+1)/(N−1)"""
    size = 2 ** n
    return (size + 1) / (size - 1)


def target_matrix(which: str, n: int) -> np.ndarray:
    """
    组件的精确目标矩阵

    Args:
        which (str): CIRCULANT、ONES、DIAG_L、D、XN、GROVER（n 比特 Grover 矩阵）或 R（2×2）
        n (int): 量子比特数

    Returns:
        np.ndarray: 实矩阵

    Raises:
        ValidationError: 未知选择器
        CapExceededError: n > 10

    Examples:
        >>> target_matrix("CIRCULANT", 1)
        array([[ 0.5, -0.5],
               [-0.5,  0.5]])
        >>> target_matrix("GROVER", 1)
        array([[0., 1.],
               [1., 0.]])
    """
    if which not in SELECTORS:
        raise ValidationError(f"未知选择器 {which}, 可选: {SELECTORS}")
    if not 1 <= n <= MAX_TARGET_QUBITS:
        raise CapExceededError(f"目标矩阵要求 1 ≤ n ≤ {MAX_TARGET_QUBITS}: {n}")
    size = 2 ** n
    idx = np.arange(size)
    total = idx[:, None] + idx[None, :]
    if which == "CIRCULANT":
        return linear_circulant(n, normalized=False).real
    if which == "ONES":
        return np.ones((size, size))
    if which == "DIAG_L":
        return np.diag(2.0 * centered_index(n) / (size - 1))
    if which == "D":
        return np.where(total < size - 1, 1.0, 0.0) - r_ratio(n) * np.where(total > size - 1, 1.0, 0.0)
    if which == "XN":
        return np.where(total == size - 1, 1.0, 0.0)
    if which == "GROVER":
        return 2.0 * np.full((size, size), 1.0 / size) - np.eye(size)
    return np.diag([1.0, -r_ratio(n)])


@dataclass(frozen=True)
class ConvolutionReport:
    """
    Attributes:
        max_off_diagonal (float): QFT·C·QFT 的最大非对角元模
        scalar (Optional[complex]): 对角线与 QFT·v 之间的比例（v = 0 时为 None）
        diagonal (np.ndarray): 对角线
    """

    max_off_diagonal: float
    scalar: Optional[complex]
    diagonal: np.ndarray


def convolution_check(v, n: int) -> ConvolutionReport:
    """
    卷积定理: 对 C_ij = v_{(i+j) mod N}，QFT·C·QFT 是对角阵，对角线为 √N·QFT(v)

    两侧都用正向 QFT；QFT·C·QFT† 对这种按 i+j 取值的矩阵是反对角的。

    Raises:
        ValidationError: v 的长度不是 2^n
        CapExceededError: n > 4
    """
    if not 1 <= n <= MAX_CONVOLUTION_QUBITS:
        raise CapExceededError(f"卷积检查要求 1 ≤ n ≤ {MAX_CONVOLUTION_QUBITS}: {n}")
    size = 2 ** n
    v = np.asarray(v, dtype=complex).reshape(-1)
    if v.size != size:
        raise ValidationError(f"v 的长度必须是 {size}: {v.size}")
    idx = np.arange(size)
    matrix = v[(idx[:, None] + idx[None, :]) % size]
    fourier = exact_qft(n)
    conjugated = fourier @ matrix @ fourier
    diagonal = np.diag(conjugated).copy()
    off = conjugated - np.diag(diagonal)
    spectrum = fourier @ v
    denom = np.vdot(spectrum, spectrum)
    scalar = complex(np.vdot(spectrum, diagonal) / denom) if abs(denom) > 1e-300 else None
    report = ConvolutionReport(float(np.max(np.abs(off))), scalar, diagonal)
    logger.debug("convolution n=%d off=%.3e scalar=%s", n, report.max_off_diagonal, scalar)
    return report
