"""
精确 QFT: 稠密矩阵、快速态变换与线性态的闭式谱

约定 ω = e^{2πi/N}，QFT|j⟩ = N^{-1/2} Σ_k ω^{jk}|k⟩。
"""

import math

import numpy as np

from ..config import STATE_QUBIT_CAP, UNITARY_QUBIT_CAP
from ..exceptions import CapExceededError, ValidationError
from ..simulator import StateVector


def _check(n: int, cap: int) -> None:
    if n < 1:
        raise ValidationError(f"n 必须为正: {n}")
    if n > cap:
        raise CapExceededError(f"QFT 上限 {cap} 个量子比特: {n}")


def exact_qft(n: int) -> np.ndarray:
    """
    QFT 的稠密矩阵

    Raises:
        CapExceededError: n > 14

    Examples:
        >>> np.allclose(exact_qft(1), np.array([[1, 1], [1, -1]]) / np.sqrt(2))
        True
    """
    _check(n, UNITARY_QUBIT_CAP)
    size = 2 ** n
    j = np.arange(size)
    return np.exp(2j * np.pi * np.outer(j, j) / size) / math.sqrt(size)


def qft_vector(values: np.ndarray, inverse: bool = False) -> np.ndarray:
    """对振幅数组（可带批量维）沿第 0 维做 QFT；正变换对应 numpy 的 ifft"""
    values = np.asarray(values, dtype=complex)
    if inverse:
        return np.fft.fft(values, axis=0, norm="ortho")
    return np.fft.ifft(values, axis=0, norm="ortho")


def qft_state(state: StateVector, inverse: bool = False) -> StateVector:
    """
    快速态变换，结果与矩阵作用一致

    Raises:
        CapExceededError: 超过 26 个量子比特
    """
    _check(state.qubits, STATE_QUBIT_CAP)
    return StateVector(state.qubits, qft_vector(state.amps, inverse))


def linear_spectrum(n: int) -> np.ndarray:
    """
    QFT|L⟩ 的闭式: k=0 处为 0，k ≥ 1 处为 √(3/(N²−1))·(1 + i·cot(πk/N))

    与 √(12/(N²−1))·(ω^k − 1)^{-1} 只差全局符号 −1。
    """
    size = 2 ** n
    out = np.zeros(size, dtype=complex)
    k = np.arange(1, size)
    out[1:] = math.sqrt(3.0 / (size ** 2 - 1.0)) * (1.0 + 1j / np.tan(np.pi * k / size))
    return out


def linear_circulant(n: int, normalized: bool = True) -> np.ndarray:
    """
    线性循环矩阵 C_ij = (N−1)/2 − ((i + j) mod N)

    normalized=True 时除以谱范数 (N/2)/sin(π/N)。
    """
    size = 2 ** n
    idx = np.arange(size)
    matrix = (size - 1) / 2.0 - ((idx[:, None] + idx[None, :]) % size)
    if normalized:
        matrix = matrix / linear_circulant_norm(n)
    return matrix.astype(complex)


def linear_circulant_norm(n: int) -> float:
    """‖C‖₂ = (N/2)/sin(π/N)（n = 1 时为 1）"""
    size = 2 ** n
    return (size / 2.0) / math.sin(math.pi / size)
