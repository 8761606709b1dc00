"""
稠密张量上的门作用核

状态张量形状为 [2]*q + [B]，最后一维是批量（列）维，大端序: 量子比特 0 是最高位。
"""

import math
from typing import Optional, Sequence

import numpy as np

from ..circuit_core.gates import Gate
from ..exceptions import ValidationError

_SQRT2_INV = 1 / math.sqrt(2)
_MATRICES = {
    "H": np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV,
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
}
_PHASES = {
    "Z": -1.0 + 0j,
    "S": 1j,
    "Sdg": -1j,
    "T": complex(np.exp(1j * math.pi / 4)),
    "Tdg": complex(np.exp(-1j * math.pi / 4)),
}
# 受控门拆成 (基础门, 控制位个数)
_CONTROLLED = {
    "CX": ("X", 1), "CZ": ("Z", 1), "CH": ("H", 1), "CRz": ("Rz", 1), "CRy": ("Ry", 1),
    "CCX": ("X", 2), "CSWAP": ("SWAP", 1),
}


def ry_matrix(angle: float) -> np.ndarray:
    c, s = math.cos(angle / 2), math.sin(angle / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def canonical(gate: Gate):
    """把门拆成 (基础门类型, 控制位, 目标位)"""
    if gate.kind in _CONTROLLED:
        base, k = _CONTROLLED[gate.kind]
        return base, gate.controls + gate.qubits[:k], gate.qubits[k:]
    if gate.kind == "MCX":
        return "X", gate.controls + gate.qubits[:-1], gate.qubits[-1:]
    return gate.kind, gate.controls, gate.qubits


def _apply_base(sub: np.ndarray, base: str, axes: Sequence[int], angle: Optional[float]) -> np.ndarray:
    if base in _PHASES or base == "Rz":
        phase = _PHASES[base] if base in _PHASES else complex(np.exp(1j * angle))
        index = [slice(None)] * sub.ndim
        index[axes[0]] = 1
        sub[tuple(index)] *= phase
        return sub
    if base in _MATRICES or base == "Ry":
        matrix = _MATRICES[base] if base in _MATRICES else ry_matrix(angle)
        ax = axes[0]
        out = np.tensordot(matrix, sub, axes=([1], [ax]))
        return np.moveaxis(out, 0, ax)
    if base == "SWAP":
        return np.swapaxes(sub, axes[0], axes[1]).copy()
    if base in ("Incrementer", "Decrementer"):
        w = len(axes)
        moved = np.moveaxis(sub, list(axes), list(range(w)))
        shape = moved.shape
        flat = moved.reshape((2 ** w, -1))
        flat = np.roll(flat, 1 if base == "Incrementer" else -1, axis=0)
        return np.moveaxis(flat.reshape(shape), list(range(w)), list(axes))
    raise ValidationError(f"模拟器不支持门类型 {base}")


def apply_gate(tensor: np.ndarray, gate: Gate, angle: Optional[float] = None) -> np.ndarray:
    """
    把一个门作用到状态张量上

    Args:
        tensor (np.ndarray): 形状 [2]*q + [B] 的张量，可能被原地修改
        gate (Gate): 门
        angle (Optional[float]): 实际使用的角度（扰动模式下已加上 η）

    Returns:
        np.ndarray: 作用后的张量
    """
    if gate.kind == "Measure":
        raise ValidationError("run 不接受 Measure 门，请使用 postselect")
    base, controls, targets = canonical(gate)
    if angle is None:
        angle = gate.angle
    if not controls:
        return _apply_base(tensor, base, targets, angle)
    index = [slice(None)] * tensor.ndim
    for c in controls:
        index[c] = 1
    index = tuple(index)
    ordered = sorted(controls)
    axes = [t - sum(1 for c in ordered if c < t) for t in targets]
    sub = tensor[index]
    tensor[index] = _apply_base(sub, base, axes, angle)
    return tensor
