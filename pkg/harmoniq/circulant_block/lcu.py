"""
LCU 积木: Ry 树态准备、受控 Grover、全 1 矩阵块编码与门重映射
"""

import math
from dataclasses import replace
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from ..circuit_core import CircuitBuilder, Gate, Register
from ..exceptions import ValidationError

AMPLITUDE_TOLERANCE = 1e-12


def index_bits(value: int, width: int) -> List[int]:
    """整数的大端序比特"""
    return [(value >> (width - 1 - i)) & 1 for i in range(width)]


def add_state_prep(builder: CircuitBuilder, qubits: Sequence[int], amplitudes: Sequence[float],
                   delta: Optional[float] = None) -> CircuitBuilder:
    """
    用 Ry 树在 |0…0⟩ 上准备实振幅态 Σ_t a_t |t⟩（允许负号）

    Args:
        builder (CircuitBuilder): 构造器
        qubits (Sequence[int]): 目标寄存器（大端序）
        amplitudes (Sequence[float]): 2^len(qubits) 个实振幅，平方和为 1
        delta (Optional[float], optional): 旋转的合成精度. Defaults to None.

    Raises:
        ValidationError: 长度不匹配或未归一化
    """
    amps = np.asarray(amplitudes, dtype=float)
    qubits = list(qubits)
    if amps.size != 2 ** len(qubits):
        raise ValidationError(f"{len(qubits)} 个量子比特需要 {2 ** len(qubits)} 个振幅, 实际 {amps.size}")
    if abs(float(np.linalg.norm(amps)) - 1.0) > 1e-10:
        raise ValidationError(f"振幅未归一化: {np.linalg.norm(amps)}")
    _prep_tree(builder, qubits, amps, [], [], delta)
    return builder


def _prep_tree(builder: CircuitBuilder, qubits: List[int], amps: np.ndarray, controls: List[int],
               values: List[int], delta: Optional[float]) -> None:
    if not qubits:
        return
    half = amps.size // 2
    left, right = amps[:half], amps[half:]
    if len(qubits) == 1:
        a, b = float(left[0]), float(right[0])
    else:
        a, b = float(np.linalg.norm(left)), float(np.linalg.norm(right))
    if math.hypot(a, b) < AMPLITUDE_TOLERANCE:
        return
    angle = 2.0 * math.atan2(b, a)
    if abs(angle) > AMPLITUDE_TOLERANCE:
        with builder.controlled_on(controls, values):
            builder.ry(qubits[0], angle, delta)
    _prep_tree(builder, qubits[1:], left, controls + [qubits[0]], values + [0], delta)
    _prep_tree(builder, qubits[1:], right, controls + [qubits[0]], values + [1], delta)


def state_prep_gates(registers: Sequence[Register], qubits: Sequence[int], amplitudes: Sequence[float],
                     delta: Optional[float] = None) -> List[Gate]:
    """在临时构造器中生成态准备的门序列（便于取逆）"""
    scratch = CircuitBuilder(registers)
    add_state_prep(scratch, qubits, amplitudes, delta)
    return list(scratch.gates)


def inverse_gates(gates: Iterable[Gate]) -> List[Gate]:
    return [g.inverse() for g in reversed(list(gates))]


def add_grover(builder: CircuitBuilder, qubits: Sequence[int], control: Optional[int] = None) -> CircuitBuilder:
    """
    G = 2|s⟩⟨s| − I；给出 control 时为受控版本

    H^{⊗k} X^{⊗k} MCZ X^{⊗k} H^{⊗k} 实现 −G，受控时用控制位上的 Z 补回符号。
    """
    qubits = list(qubits)
    if not qubits:
        raise ValidationError("Grover 反射至少需要 1 个量子比特")
    for q in qubits:
        builder.h(q).x(q)
    extra = [control] if control is not None else []
    builder.mcz(extra + qubits[:-1], qubits[-1])
    for q in qubits:
        builder.x(q).h(q)
    if control is not None:
        builder.z(control)
    return builder


def add_ones(builder: CircuitBuilder, ancilla: int, qubits: Sequence[int]) -> CircuitBuilder:
    """全 1 矩阵的块编码: 块为 (I + G)/2 = 𝟏/2^k"""
    builder.h(ancilla)
    add_grover(builder, qubits, control=ancilla)
    builder.h(ancilla)
    return builder


def remap(gates: Iterable[Gate], mapping: Dict[int, int]) -> List[Gate]:
    """按 mapping 重写门的量子比特"""
    return [
        replace(g, qubits=tuple(mapping[q] for q in g.qubits), controls=tuple(mapping[q] for q in g.controls))
        for g in gates
    ]
