"""
谐波态与余切态的解析目标及其误差拟合
"""

import math

import numpy as np

from ..config import M_RANGE, STATE_QUBIT_CAP
from ..exceptions import CapExceededError, InfeasibleTargetError, ValidationError
from ..simulator import StateVector, distance

VARIANTS = ("single", "combined")


def _check(n: int, m: int = 0) -> None:
    if n < 1 or m < 0:
        raise ValidationError(f"需要 n ≥ 1 且 m ≥ 0: n={n}, m={m}")
    if n + m > STATE_QUBIT_CAP:
        raise CapExceededError(f"n + m 不能超过 {STATE_QUBIT_CAP}: {n + m}")


def harmonic_target(n: int) -> StateVector:
    """
    |h⟩ ∝ Σ_{x=1}^{N−1} (1/x)|x⟩

    Examples:
        >>> harmonic_target(2).amps.real * 7
        array([0., 6., 3., 2.])
    """
    _check(n)
    x = np.arange(2 ** n, dtype=float)
    amps = np.zeros_like(x)
    amps[1:] = 1.0 / x[1:]
    return StateVector.from_amplitudes(amps)


def _cot(n: int, m: int) -> np.ndarray:
    x = np.arange(1, 2 ** n, dtype=float)
    return 1.0 / np.tan(np.pi * x / 2 ** (n + m))


def cotangent_target(n: int, m: int, variant: str = "combined") -> StateVector:
    """
    余切近似态

    single: Σ_{x≥1} (1 + i·cot(πx/(MN)))|x⟩；
    combined: ½|0⟩ + i·Σ_{x≥1} cot(πx/(MN))|x⟩。

    Raises:
        ValidationError: variant 未知
    """
    _check(n, m)
    if variant not in VARIANTS:
        raise ValidationError(f"variant 必须是 {VARIANTS} 之一: {variant}")
    amps = np.zeros(2 ** n, dtype=complex)
    if variant == "single":
        amps[1:] = 1.0 + 1j * _cot(n, m)
    else:
        amps[0] = 0.5
        amps[1:] = 1j * _cot(n, m)
    return StateVector.from_amplitudes(amps)


def second_asymptote_target(n: int, m: int) -> StateVector:
    """未合并流水线中辅助比特全 1 分支: |0⟩ 处为 −1，x ≥ 1 处为 1 − i·cot(πx/(MN))"""
    _check(n, m)
    amps = np.zeros(2 ** n, dtype=complex)
    amps[0] = -1.0
    amps[1:] = 1.0 - 1j * _cot(n, m)
    return StateVector.from_amplitudes(amps)


def lemma_distance(n: int, m: int, variant: str = "combined") -> float:
    """‖|c⟩ − i|h⟩‖（不做相位优化）"""
    target = harmonic_target(n)
    return distance(cotangent_target(n, m, variant), 1j * target.amps, phase_invariant=False)


def predicted_distance(n: int, m: int, variant: str = "combined") -> float:
    """
    拟合式: single 为 √6/2^{n/2+m}，combined 为 √3/2^{n+m+1/2}

    Examples:
        >>> predicted_distance(20, 14) < 1e-10
        True
    """
    if variant not in VARIANTS:
        raise ValidationError(f"variant 必须是 {VARIANTS} 之一: {variant}")
    if variant == "single":
        return math.sqrt(6.0) / 2.0 ** (n / 2.0 + m)
    return math.sqrt(3.0) / 2.0 ** (n + m + 0.5)


def required_total_qubits(epsilon: float) -> int:
    """
    combined 变体达到 ε 所需的总比特数 ⌈log₂(√3/ε) − 1/2⌉

    Examples:
        >>> required_total_qubits(1e-10)
        34
    """
    if not 0.0 < epsilon < 1.0:
        raise ValidationError(f"ε 必须在 (0, 1) 内: {epsilon}")
    return math.ceil(math.log2(math.sqrt(3.0) / epsilon) - 0.5)


def required_ancilla(n: int, epsilon: float, variant: str = "combined") -> int:
    """
    拟合式下达到 ε 的最小 m（至少为 1）

    Raises:
        InfeasibleTargetError: 需要的 m 超过上限
    """
    if not 0.0 < epsilon < 1.0:
        raise ValidationError(f"ε 必须在 (0, 1) 内: {epsilon}")
    if variant == "single":
        m = math.ceil(math.log2(math.sqrt(6.0) / epsilon) - n / 2.0)
    elif variant == "combined":
        m = required_total_qubits(epsilon) - n
    else:
        raise ValidationError(f"variant 必须是 {VARIANTS} 之一: {variant}")
    m = max(m, M_RANGE[0])
    if m > M_RANGE[1]:
        raise InfeasibleTargetError(f"ε={epsilon} 在 n={n} 时需要 m={m} > {M_RANGE[1]}")
    return m
