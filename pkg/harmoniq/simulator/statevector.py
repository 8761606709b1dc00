"""
稠密态矢量模拟
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..circuit_core.circuit import Circuit
from ..config import DEFAULT_SEED, STATE_QUBIT_CAP
from ..exceptions import CapExceededError, ImpossibleOutcomeError, ValidationError
from .kernels import apply_gate

logger = logging.getLogger(__name__)

NORM_TOLERANCE = 1e-10
IMPOSSIBLE_PROBABILITY = 1e-300
SYNTHESIS_MODES = ("exact", "perturbed")


@dataclass(frozen=True)
class StateVector:
    """
    q 个量子比特上的单位范数态，大端序索引 x = Σ 2^{q-1-i}·bit(i)

    Attributes:
        qubits (int): 量子比特数
        amps (np.ndarray): 2^q 个复振幅
    """

    qubits: int
    amps: np.ndarray

    def __post_init__(self) -> None:
        amps = np.asarray(self.amps, dtype=complex).reshape(-1)
        if amps.size != 2 ** self.qubits:
            raise ValidationError(f"{self.qubits} 个量子比特需要 {2 ** self.qubits} 个振幅, 实际 {amps.size}")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise ValidationError(f"态矢量未归一化: ‖ψ‖ = {norm}")
        object.__setattr__(self, "amps", amps)

    @classmethod
    def zero(cls, qubits: int) -> "StateVector":
        amps = np.zeros(2 ** qubits, dtype=complex)
        amps[0] = 1.0
        return cls(qubits, amps)

    @classmethod
    def basis(cls, qubits: int, index: int) -> "StateVector":
        amps = np.zeros(2 ** qubits, dtype=complex)
        amps[index] = 1.0
        return cls(qubits, amps)

    @classmethod
    def from_amplitudes(cls, values) -> "StateVector":
        """
        从任意（未归一化）振幅构造态

        Raises:
            ValidationError: 长度不是 2 的幂或全为零
        """
        amps = np.asarray(values, dtype=complex).reshape(-1)
        qubits = int(round(np.log2(amps.size))) if amps.size else -1
        if qubits < 0 or 2 ** qubits != amps.size:
            raise ValidationError(f"振幅个数必须是 2 的幂: {amps.size}")
        norm = np.linalg.norm(amps)
        if norm == 0:
            raise ValidationError("零向量无法归一化")
        return cls(qubits, amps / norm)

    def tensor(self, other: "StateVector") -> "StateVector":
        """张量积，self 占高位"""
        return StateVector(self.qubits + other.qubits, np.kron(self.amps, other.amps))

    def dump(self) -> Dict[str, object]:
        """导出为 {qubits, amplitudes: [[re, im], ...]}"""
        return {
            "qubits": self.qubits,
            "amplitudes": [[float(a.real), float(a.imag)] for a in self.amps],
        }


@dataclass(frozen=True)
class SynthesisModel:
    """
    旋转合成模型

    Attributes:
        mode (str): "exact" 忽略 δ；"perturbed" 对合成旋转施加 θ+η，η = ±δ 等概率
        seed (int): 随机种子
        delta (Optional[float]): 覆盖门上携带的 δ（None 表示使用门自身的 δ）
    """

    mode: str = "exact"
    seed: int = DEFAULT_SEED
    delta: Optional[float] = None

    def __post_init__(self) -> None:
        if self.mode not in SYNTHESIS_MODES:
            raise ValidationError(f"mode 必须是 {SYNTHESIS_MODES} 之一: {self.mode}")
        if self.delta is not None and self.delta < 0:
            raise ValidationError(f"δ 不能为负: {self.delta}")

    @classmethod
    def exact(cls) -> "SynthesisModel":
        return cls("exact")

    @classmethod
    def perturbed(cls, seed: int = DEFAULT_SEED, delta: Optional[float] = None) -> "SynthesisModel":
        return cls("perturbed", seed, delta)


def _evolve(circuit: Circuit, tensor: np.ndarray, model: Optional[SynthesisModel]) -> np.ndarray:
    model = model or SynthesisModel.exact()
    rng = np.random.default_rng(model.seed) if model.mode == "perturbed" else None
    for gate in circuit.gates:
        angle = gate.angle
        if rng is not None and gate.synthesized:
            delta = gate.delta if model.delta is None else model.delta
            angle = angle + (delta if rng.integers(0, 2) else -delta)
        tensor = apply_gate(tensor, gate, angle)
    return tensor


def run_batch(circuit: Circuit, columns: np.ndarray, model: Optional[SynthesisModel] = None) -> np.ndarray:
    """
    对多列输入同时执行电路（同一扰动实例）

    Args:
        circuit (Circuit): 电路
        columns (np.ndarray): 形状 (2^q, B) 的输入列
        model (Optional[SynthesisModel]): 合成模型

    Returns:
        np.ndarray: 形状 (2^q, B) 的输出列
    """
    q = circuit.width
    columns = np.asarray(columns, dtype=complex)
    if columns.ndim != 2 or columns.shape[0] != 2 ** q:
        raise ValidationError(f"输入列形状应为 (2^{q}, B), 实际 {columns.shape}")
    tensor = columns.reshape([2] * q + [columns.shape[1]]).copy()
    tensor = _evolve(circuit, tensor, model)
    return tensor.reshape(2 ** q, -1)


def run(circuit: Circuit, state: Optional[StateVector] = None,
        model: Optional[SynthesisModel] = None) -> StateVector:
    """
    依次作用电路中的门

    Args:
        circuit (Circuit): 电路（不能含 Measure）
        state (Optional[StateVector]): 输入态，默认 |0…0⟩
        model (Optional[SynthesisModel]): 合成模型，默认精确

    Returns:
        StateVector: 输出态

    Raises:
        ValidationError: 宽度不一致
        CapExceededError: 超过 26 个量子比特

    Examples:
        >>> b = CircuitBuilder([Register("data", 0, 1)])
        >>> run(b.h(0).build()).amps
        array([0.70710678+0.j, 0.70710678+0.j])
    """
    if circuit.width > STATE_QUBIT_CAP:
        raise CapExceededError(f"态模拟上限 {STATE_QUBIT_CAP} 个量子比特, 电路宽度 {circuit.width}")
    state = state or StateVector.zero(circuit.width)
    if state.qubits != circuit.width:
        raise ValidationError(f"态有 {state.qubits} 个量子比特, 电路宽度 {circuit.width}")
    out = run_batch(circuit, state.amps.reshape(-1, 1), model)[:, 0]
    return StateVector(circuit.width, out)


def postselect(state: StateVector, qubits: Sequence[int], bits: Union[int, Sequence[int]],
               keep: bool = True) -> Tuple[StateVector, float]:
    """
    对指定量子比特做后选择

    Args:
        state (StateVector): 输入态
        qubits (Sequence[int]): 被测量的量子比特
        bits (Union[int, Sequence[int]]): 期望结果；整数按大端序解释
        keep (bool, optional): True 保留全部量子比特，False 删去被测量的比特. Defaults to True.

    Returns:
        Tuple[StateVector, float]: (重新归一化的条件态, 概率)

    Raises:
        ValidationError: 量子比特越界
        ImpossibleOutcomeError: 概率低于 1e-300

    Examples:
        >>> bell = StateVector.from_amplitudes([1, 0, 0, 1])
        >>> post, p = postselect(bell, [0], [0])
        >>> p
        0.5
    """
    qubits = list(qubits)
    if any(q < 0 or q >= state.qubits for q in qubits) or len(set(qubits)) != len(qubits):
        raise ValidationError(f"后选择的量子比特不合法: {qubits}")
    if isinstance(bits, (int, np.integer)):
        value = int(bits)
        bits = [(value >> (len(qubits) - 1 - i)) & 1 for i in range(len(qubits))]
    bits = list(bits)
    if len(bits) != len(qubits) or any(b not in (0, 1) for b in bits):
        raise ValidationError(f"后选择结果不合法: {bits}")
    tensor = state.amps.reshape([2] * state.qubits)
    index: List[object] = [slice(None)] * state.qubits
    for q, b in zip(qubits, bits):
        index[q] = b
    sub = tensor[tuple(index)]
    prob = float(np.sum(np.abs(sub) ** 2))
    if prob < IMPOSSIBLE_PROBABILITY:
        raise ImpossibleOutcomeError(f"结果 {bits} 在量子比特 {qubits} 上不可能出现 (p={prob:.3e})")
    if keep:
        out = np.zeros_like(tensor)
        out[tuple(index)] = sub / np.sqrt(prob)
        return StateVector(state.qubits, out.reshape(-1)), prob
    remaining = state.qubits - len(qubits)
    if remaining == 0:
        return StateVector(0, np.array([sub / np.sqrt(prob)])), prob
    return StateVector(remaining, (sub / np.sqrt(prob)).reshape(-1)), prob


def outcome_probabilities(state: StateVector, qubits: Sequence[int]) -> np.ndarray:
    """返回寄存器所有结果的概率（大端序索引）"""
    tensor = np.abs(state.amps.reshape([2] * state.qubits)) ** 2
    others = tuple(q for q in range(state.qubits) if q not in qubits)
    marginal = tensor.sum(axis=others) if others else tensor
    order = sorted(range(len(qubits)), key=lambda i: sorted(qubits).index(qubits[i]))
    return np.transpose(marginal, order).reshape(-1)
