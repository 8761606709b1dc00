"""
谐波态流水线: n+m 比特线性态 → QFT → 渐近线修正 →（可选）合并 → 后选择

辅助寄存器占最高的 m 位，全局索引 X = A·N + x。QFT 之后 A = 0 分支是第一条渐近线
1 + i·cot(πx/(MN))；A = M−1 分支经比特反转与加一后变成第二条渐近线 1 − i·cot(πx/(MN))。
合并时把 A = M−1 搬到 A = M/2，再在最高辅助位上作用带相位的 H。
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional

import numpy as np

from ..circuit_core import Circuit, CircuitBuilder, Gate, Register, ResourceEstimate
from ..config import DEFAULT_SEED
from ..estimator.cost_model import harmonic_cost
from ..exceptions import CapExceededError, ValidationError
from ..linear_prep import linear_target, prepare_linear_state
from ..linear_prep.linear_state import MAX_LINEAR_QUBITS
from ..qft import build_approx_qft
from ..simulator import StateVector, SynthesisModel, distance, postselect, run
from .targets import cotangent_target

logger = logging.getLogger(__name__)

# 合并用的 H 之前在最高辅助位上作用的相位，由 calibrate_combining_phase 标定
COMBINING_PHASE = -1 + 0j
PHASE_CANDIDATES: Dict[complex, Optional[str]] = {1 + 0j: None, -1 + 0j: "Z", 1j: "S", -1j: "Sdg"}
SIMULATION_QUBIT_CAP = 20
LINEAR_SOURCES = ("analytic", "circuit")


@lru_cache(maxsize=16)
def circuit_linear_state(total: int, seed: int = DEFAULT_SEED) -> StateVector:
    """线性态程序制备的 total 比特 |L⟩；同一 (total, seed) 只模拟一次"""
    if total > MAX_LINEAR_QUBITS:
        raise CapExceededError(f"电路制备线性态最多 {MAX_LINEAR_QUBITS} 比特: {total}")
    return prepare_linear_state(total, seed).state


def build_amendment(n: int, m: int, combine: bool = True, phase: complex = COMBINING_PHASE) -> Circuit:
    """
    渐近线修正（与合并）电路，寄存器为 ancilla(m) 与 data(n)

    (1) 以最高辅助位为 1、数据为 0 为条件，用 m−1 个 MCX 交换 |(M−1)N⟩ 与 |MN/2⟩，
        再用一个 MCZ 修正该位置的符号；
    (2) 以最高辅助位为条件，对数据做比特反转；
    (3) 以最高辅助位为条件，数据加一。

    Raises:
        ValidationError: m = 0 或相位不在候选集合中
    """
    if m < 1:
        raise ValidationError(f"m 必须至少为 1 才能分离两条渐近线: {m}")
    if phase not in PHASE_CANDIDATES:
        raise ValidationError(f"合并相位必须是 {list(PHASE_CANDIDATES)} 之一: {phase}")
    builder = CircuitBuilder([Register("ancilla", 0, m, "clean"), Register("data", m, n)])
    anc = builder.qubits("ancilla")
    data = builder.qubits("data")
    top = anc[0]

    with builder.controlled_on(data, [0] * n):
        for q in anc[1:]:
            builder.cx(top, q)
        builder.z(top)
    for q in data:
        builder.cx(top, q)
    with builder.controlled_on([top]):
        builder.incrementer(data)

    if combine:
        for q in anc[1:]:
            builder.cx(top, q)
        gate = PHASE_CANDIDATES[phase]
        if gate is not None:
            builder.add(Gate(gate, (top,)))
        builder.h(top)
    return builder.build()


@dataclass
class HarmonicResult:
    """后选择后的数据寄存器态与成功概率"""

    state: StateVector
    success_prob: float
    outcome: int


@dataclass
class HarmonicProgram:
    """
    谐波态程序

    Attributes:
        n (int): 数据比特数
        m (int): 辅助比特数
        combine (bool): 是否合并两条渐近线
        circuit (Circuit): QFT 与修正电路，输入为 n+m 比特的 |L⟩
        ledger (ResourceEstimate): 公式账本
    """

    n: int
    m: int
    combine: bool
    circuit: Circuit
    ledger: ResourceEstimate

    def full_state(self, model: Optional[SynthesisModel] = None, source: str = "analytic",
                   seed: int = DEFAULT_SEED) -> StateVector:
        """
        执行电路并返回后选择前的全态

        source="analytic" 直接以解析 |L⟩ 为输入；"circuit" 先用线性态程序制备（n+m ≤ 12）。
        """
        total = self.n + self.m
        if source not in LINEAR_SOURCES:
            raise ValidationError(f"source 必须是 {LINEAR_SOURCES} 之一: {source}")
        if source == "circuit":
            linear = circuit_linear_state(total, seed)
        else:
            linear = linear_target(total)
        return run(self.circuit, linear, model)

    def postselected(self, outcome: int = 0, model: Optional[SynthesisModel] = None,
                     source: str = "analytic", seed: int = DEFAULT_SEED) -> HarmonicResult:
        """
        后选择辅助寄存器为 outcome（大端序整数）

        Returns:
            HarmonicResult: 数据寄存器态与概率
        """
        state = self.full_state(model, source, seed)
        data, prob = postselect(state, self.circuit.qubits("ancilla"), outcome, keep=False)
        logger.debug("harmonic n=%d m=%d outcome=%d prob=%.6f", self.n, self.m, outcome, prob)
        return HarmonicResult(data, prob, outcome)


def build_harmonic(n: int, m: int, delta: Optional[float] = 1e-10, combine: bool = True,
                   phase: complex = COMBINING_PHASE) -> HarmonicProgram:
    """
    构造谐波态流水线

    Args:
        n (int): 数据比特数
        m (int): 辅助比特数（至少 1）
        delta (Optional[float], optional): QFT 合成精度，None 时 QFT 用精确旋转. Defaults to 1e-10.
        combine (bool, optional): 是否合并. Defaults to True.
        phase (complex, optional): 合并相位. Defaults to COMBINING_PHASE.

    Returns:
        HarmonicProgram: 精确模式下后选择 |0…0⟩ 得到 cotangent_target(n, m, variant)

    Raises:
        ValidationError: m = 0
        CapExceededError: n + m 超过模拟上限

    Examples:
        >>> program = build_harmonic(5, 3)
        >>> result = program.postselected()
        >>> distance(result.state, cotangent_target(5, 3)) < 1e-10
        True
    """
    if n < 1:
        raise ValidationError(f"n 必须为正: {n}")
    if m < 1:
        raise ValidationError(f"m 必须至少为 1 才能分离两条渐近线: {m}")
    if n + m > SIMULATION_QUBIT_CAP:
        raise CapExceededError(f"n + m 不能超过 {SIMULATION_QUBIT_CAP}: {n + m}")
    qft = build_approx_qft(n + m, delta)
    amendment = build_amendment(n, m, combine, phase)
    circuit = Circuit(amendment.width, amendment.registers, qft.gates + amendment.gates)
    ledger = harmonic_cost(n, m, delta if delta is not None else 1e-10)
    circuit = circuit.with_ledger(ledger)
    logger.debug("harmonic n=%d m=%d combine=%s gates=%d", n, m, combine, len(circuit))
    return HarmonicProgram(n, m, combine, circuit, ledger)


def calibrate_combining_phase(n: int = 4, m: int = 2) -> complex:
    """
    在候选相位 {1, −1, i, −i} 中选出使合并结果最接近 |c′⟩ 的一个

    Returns:
        complex: 最优相位
    """
    target = cotangent_target(n, m, "combined")
    scores = {}
    for phase in PHASE_CANDIDATES:
        program = build_harmonic(n, m, None, True, phase)
        result = program.postselected()
        scores[phase] = distance(result.state, target)
    best = min(scores, key=scores.get)
    logger.info("combining phase scores %s -> %s", scores, best)
    return best


def asymptote_states(n: int, m: int, model: Optional[SynthesisModel] = None) -> Dict[str, HarmonicResult]:
    """未合并流水线中辅助比特全 0 与全 1 两个分支"""
    program = build_harmonic(n, m, None, combine=False)
    state = program.full_state(model)
    anc = program.circuit.qubits("ancilla")
    out = {}
    for name, outcome in (("first", 0), ("second", 2 ** m - 1)):
        data, prob = postselect(state, anc, outcome, keep=False)
        out[name] = HarmonicResult(data, prob, outcome)
    return out


def amendment_is_permutation(n: int, m: int) -> bool:
    """
    修正步骤 (1)–(3) 在基态上是带符号的置换（全态 |振幅|² 的多重集不变）

    Raises:
        CapExceededError: n + m > 8
    """
    if n + m > 8:
        raise CapExceededError(f"穷举检查只支持 n + m ≤ 8: {n + m}")
    circuit = build_amendment(n, m, combine=False)
    dim = 2 ** (n + m)
    rng = np.random.default_rng(DEFAULT_SEED)
    amps = rng.random(dim)
    before = StateVector.from_amplitudes(amps)
    after = run(circuit, before)
    return bool(np.allclose(np.sort(np.abs(after.amps) ** 2), np.sort(np.abs(before.amps) ** 2), atol=1e-14))
