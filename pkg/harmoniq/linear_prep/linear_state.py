"""
线性（锯齿）态 |L⟩ ∝ Σ_x ((N−1)/2 − x)|x⟩ 的精确准备

(N−1)/2 − x = ½ Σ_k 2^k (−1)^{x_k}，所以 |L⟩ ∝ Σ_k 2^k Z_k |+⟩^{⊗n}:
PREP₁ 在选择寄存器上准备振幅 ∝ 2^k 的态（|e_{1/2}⟩ 的补码索引），SELECT 作用 Z_k，
PREP₂ = H^{⊗a}。测量结果 s 只改变各项符号 (−1)^{s·k}，X_k 恰好翻转 Z_k 项的符号，
所以把这一修正写成 CNOT 网络后再作用一次 H^{⊗a} 即可让选择寄存器确定地回到 |0…0⟩。
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from ..circuit_core import Circuit, CircuitBuilder, Gate, Register, ResourceEstimate
from ..config import DEFAULT_SEED
from ..exceptions import ValidationError
from ..rotation_widgets import (
    ExponentialProgram,
    ExponentialResult,
    ExponentialSpec,
    build_exponential,
)
from ..simulator import StateVector, distance, postselect, run
from .select_z import build_select_z, is_power_of_two, select_width

logger = logging.getLogger(__name__)

MAX_LINEAR_QUBITS = 12
MAX_DIRECT_QUBITS = 16
LINEARITY_TOLERANCE = 1e-9


def linear_target(n: int) -> StateVector:
    """
    解析目标 |L⟩

    Examples:
        >>> linear_target(2).amps.real * np.sqrt(5)
        array([ 1.5,  0.5, -0.5, -1.5])
    """
    if n < 1:
        raise ValidationError(f"n 必须为正: {n}")
    size = 2 ** n
    return StateVector.from_amplitudes((size - 1) / 2 - np.arange(size, dtype=float))


def linear_expected_t_depth(n: int) -> float:
    """期望 T 深度 2n + 4⌈log₂ n⌉"""
    return 2.0 * n + 4.0 * select_width(n)


def linear_quoted_ancilla(n: int) -> int:
    """引用的辅助比特总数 n + 2⌈log₂ n⌉ − 1"""
    return n + 2 * select_width(n) - 1


def correction_pattern(n: int, outcome: int) -> Tuple[int, ...]:
    """
    选择寄存器测得 outcome 后需要作用 X 的数据量子比特（数据寄存器内的下标）

    结果 s 给第 k 项带来符号 (−1)^{popcount(s & k)}，翻转这些项即可。
    """
    a = select_width(n)
    if not 0 <= outcome < 2 ** a:
        raise ValidationError(f"结果 {outcome} 超出 {a} 位选择寄存器的范围")
    return tuple(n - 1 - k for k in range(n) if bin(outcome & k).count("1") % 2)


def _check_direct(n: int) -> None:
    if not 2 <= n <= MAX_DIRECT_QUBITS:
        raise ValidationError(f"直接构造要求 2 ≤ n ≤ {MAX_DIRECT_QUBITS}: {n}")
    if not is_power_of_two(n):
        raise ValidationError(f"直接构造要求 n 为 2 的幂, 其它 n 请用 prepare_linear_state: {n}")


def build_linear_core(n: int, corrected: bool = True) -> Circuit:
    """
    构造作用在 [select a][data n] 上的 Clifford+SELECT 部分

    输入为 |e_{1/2}⟩ ⊗ |0…0⟩。corrected=False 时在 PREP₂ 之后停止，留给测量与经典修正。

    Args:
        n (int): 数据比特数（2 的幂）
        corrected (bool, optional): 是否追加相干修正网络与 H^{⊗a}. Defaults to True.

    Returns:
        Circuit: 选择寄存器为 clean 辅助比特的电路
    """
    _check_direct(n)
    a = select_width(n)
    select = build_select_z(n)
    builder = CircuitBuilder([Register("select", 0, a, "clean"), Register("data", a, n)])
    sel = builder.qubits("select")
    data = builder.qubits("data")
    for q in sel:
        builder.x(q)
    for q in data:
        builder.h(q)
    builder.extend(select.gates)
    for q in sel:
        builder.h(q)
    if corrected:
        for i in range(a):
            for k in range(n):
                if (k >> i) & 1:
                    builder.cx(sel[a - 1 - i], data[n - 1 - k])
        for q in sel:
            builder.h(q)
    return builder.build(select.ledger.with_ancilla(a))


@dataclass
class LinearResult:
    """一次准备的结果: 数据寄存器态与选择寄存器回到 |0⟩ 的概率"""

    state: StateVector
    ancilla_prob: float
    exponential: ExponentialResult


@dataclass
class LinearProgram:
    """
    |L⟩ 准备程序

    Attributes:
        n (int): 数据比特数
        exponential (ExponentialProgram): PREP₁ 的小部件程序
        core (Circuit): SELECT 与修正网络
        ledger (ResourceEstimate): 期望 T 深度 2n + 4⌈log₂ n⌉
    """

    n: int
    exponential: ExponentialProgram
    core: Circuit
    ledger: ResourceEstimate
    quoted_ancilla: int = field(init=False)

    def __post_init__(self) -> None:
        self.quoted_ancilla = linear_quoted_ancilla(self.n)

    @property
    def measured_ancilla(self) -> int:
        """本实现实际使用的辅助比特: 选择寄存器加小部件辅助比特"""
        return self.ledger.clean_ancilla + self.ledger.persistent_ancilla

    def prepare(self, seed: int = DEFAULT_SEED) -> LinearResult:
        exp = self.exponential.prepare(seed)
        state = run(self.core, exp.state.tensor(StateVector.zero(self.n)))
        data, prob = postselect(state, self.core.qubits("select"), 0, keep=False)
        logger.debug("linear n=%d ancilla prob=%.15f", self.n, prob)
        return LinearResult(data, prob, exp)


def build_linear(n: int) -> LinearProgram:
    """
    构造 |L⟩ 的精确准备程序

    每一个选择寄存器结果都被相干修正，只有小部件的重复是概率性的。

    Args:
        n (int): 数据比特数，2 的幂且 2 ≤ n ≤ 16

    Returns:
        LinearProgram: 程序

    Raises:
        ValidationError: n 超出范围或不是 2 的幂

    Examples:
        >>> build_linear(8).ledger.expected_t_depth
        28.0
    """
    _check_direct(n)
    a = select_width(n)
    exponential = build_exponential(ExponentialSpec(a, 0.5))
    core = build_linear_core(n)
    depth = linear_expected_t_depth(n)
    ledger = ResourceEstimate(
        t_count=exponential.ledger.t_count + core.ledger.t_count,
        t_depth=depth,
        expected_t_depth=depth,
        clean_ancilla=a,
        persistent_ancilla=exponential.ledger.persistent_ancilla,
    )
    logger.debug("linear n=%d ledger=%s", n, ledger)
    return LinearProgram(n, exponential, core, ledger)


def reduce_linear(state: StateVector) -> Tuple[StateVector, float]:
    """
    对最低位作用 H 并测量，结果 0 时得到 n−1 比特的 |L⟩

    结果 1 的精确概率为 3/(N²−1)，常被近似为 3/N²。

    Args:
        state (StateVector): n ≥ 2 比特的 |L⟩

    Returns:
        Tuple[StateVector, float]: (n−1 比特的 |L⟩, 结果 0 的概率)

    Raises:
        ValidationError: 输入不是线性态
    """
    n = state.qubits
    if n < 2:
        raise ValidationError(f"至少需要 2 个量子比特才能约化: {n}")
    gap = distance(state, linear_target(n))
    if gap > LINEARITY_TOLERANCE:
        raise ValidationError(f"输入不是线性态, 距离 {gap:.3e}")
    builder = CircuitBuilder([Register("data", 0, n)])
    after = run(builder.h(n - 1).build(), state)
    reduced, prob = postselect(after, [n - 1], 0, keep=False)
    return reduced, prob


def reduction_failure_estimate(n: int) -> float:
    """约化失败概率的估计 3/N²"""
    return 3.0 / 4.0 ** n


def reduction_failure_exact(n: int) -> float:
    """约化失败的精确概率 3/(N²−1)"""
    return 3.0 / (4.0 ** n - 1.0)


@dataclass
class LinearPreparation:
    """
    任意 n 的准备结果

    Attributes:
        state (StateVector): n 比特 |L⟩
        success_prob (float): 各次约化结果 0 的概率之积
        estimated_success_prob (float): 按 3/N² 估计的同一乘积
        built_qubits (int): 直接构造的比特数（不小于 n 的 2 的幂）
    """

    state: StateVector
    success_prob: float
    estimated_success_prob: float
    built_qubits: int
    reductions: List[float] = field(default_factory=list)


def prepare_linear_state(n: int, seed: Optional[int] = None) -> LinearPreparation:
    """
    准备任意 1 ≤ n ≤ 12 比特的 |L⟩: 直接构造下一个 2 的幂再逐位约化

    Raises:
        ValidationError: n 超出范围
    """
    if not 1 <= n <= MAX_LINEAR_QUBITS:
        raise ValidationError(f"n 必须在 [1, {MAX_LINEAR_QUBITS}] 内: {n}")
    built = 1 << max(1, math.ceil(math.log2(n)))
    state = build_linear(built).prepare(DEFAULT_SEED if seed is None else seed).state
    success, estimate, probs = 1.0, 1.0, []
    for width in range(built, n, -1):
        state, p = reduce_linear(state)
        probs.append(p)
        success *= p
        estimate *= 1.0 - reduction_failure_estimate(width)
    logger.info("linear state n=%d built from %d qubits, success=%.6f", n, built, success)
    return LinearPreparation(state, success, estimate, built, probs)


def apply_correction(state: StateVector, qubits: Tuple[int, ...]) -> StateVector:
    """对给定量子比特作用 X（经典修正）"""
    if not qubits:
        return state
    builder = CircuitBuilder([Register("data", 0, state.qubits)])
    builder.extend(Gate("X", (q,)) for q in qubits)
    return run(builder.build(), state)
