"""
门集合定义

Rz 采用相位形式 diag(1, e^{iθ})，与教科书 Rz 只差一个全局相位。
"""

import math
from dataclasses import dataclass, replace
from typing import Dict, Optional, Tuple

from ..exceptions import ValidationError

# 固定元数门: kind -> 作用的量子比特数
FIXED_ARITY: Dict[str, int] = {
    "H": 1, "X": 1, "Y": 1, "Z": 1, "S": 1, "Sdg": 1, "T": 1, "Tdg": 1,
    "Rz": 1, "Ry": 1, "Measure": 1,
    "CX": 2, "CZ": 2, "CH": 2, "SWAP": 2, "CRz": 2, "CRy": 2,
    "CSWAP": 3, "CCX": 3,
}
# 可变元数门
VARIABLE_ARITY = ("MCX", "Incrementer", "Decrementer")

ROTATION_KINDS = ("Rz", "Ry", "CRz", "CRy")
SELF_INVERSE = ("H", "X", "Y", "Z", "CX", "CZ", "CH", "SWAP", "CSWAP", "CCX", "MCX")
KNOWN_KINDS = tuple(FIXED_ARITY) + VARIABLE_ARITY


@dataclass(frozen=True)
class Gate:
    """
    单个门

    Attributes:
        kind (str): 门类型，见 KNOWN_KINDS
        qubits (Tuple[int, ...]): 按顺序的量子比特（受控门先控制后目标，MCX 最后一位是目标）
        angle (Optional[float]): 旋转角（弧度），仅旋转门使用
        delta (Optional[float]): 合成精度 δ，存在时表示这是一个合成旋转
        controls (Tuple[int, ...]): 额外控制位（全部为 |1⟩ 时才作用）
    """

    kind: str
    qubits: Tuple[int, ...]
    angle: Optional[float] = None
    delta: Optional[float] = None
    controls: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        object.__setattr__(self, "controls", tuple(int(q) for q in self.controls))
        if self.kind not in KNOWN_KINDS:
            raise ValidationError(f"未知的门类型: {self.kind}")
        if self.kind in FIXED_ARITY:
            if len(self.qubits) != FIXED_ARITY[self.kind]:
                raise ValidationError(
                    f"{self.kind} 需要 {FIXED_ARITY[self.kind]} 个量子比特, 实际 {len(self.qubits)}"
                )
        elif not self.qubits:
            raise ValidationError(f"{self.kind} 至少需要 1 个量子比特")
        touched = self.qubits + self.controls
        if len(set(touched)) != len(touched):
            raise ValidationError(f"{self.kind} 的量子比特索引重复: {touched}")
        if any(q < 0 for q in touched):
            raise ValidationError(f"{self.kind} 含负的量子比特索引: {touched}")
        if self.kind in ROTATION_KINDS:
            if self.angle is None or not math.isfinite(self.angle):
                raise ValidationError(f"{self.kind} 的角度必须是有限实数: {self.angle}")
        elif self.angle is not None:
            raise ValidationError(f"{self.kind} 不接受角度参数")
        if self.delta is not None:
            if self.kind not in ROTATION_KINDS:
                raise ValidationError(f"只有旋转门可以携带 δ, 而不是 {self.kind}")
            if not 0.0 < self.delta < 1.0:
                raise ValidationError(f"δ 必须在 (0, 1) 内: {self.delta}")

    @property
    def all_qubits(self) -> Tuple[int, ...]:
        """门触及的全部量子比特（额外控制位在前）"""
        return self.controls + self.qubits

    @property
    def synthesized(self) -> bool:
        return self.delta is not None

    def with_controls(self, extra: Tuple[int, ...]) -> "Gate":
        """返回追加额外控制位后的门"""
        return replace(self, controls=tuple(extra) + self.controls)

    def inverse(self) -> "Gate":
        """
        返回逆门

        Raises:
            ValidationError: Measure 不可逆
        """
        if self.kind in SELF_INVERSE:
            return self
        swaps = {"S": "Sdg", "Sdg": "S", "T": "Tdg", "Tdg": "T",
                 "Incrementer": "Decrementer", "Decrementer": "Incrementer"}
        if self.kind in swaps:
            return replace(self, kind=swaps[self.kind])
        if self.kind in ROTATION_KINDS:
            return replace(self, angle=-self.angle)
        raise ValidationError(f"{self.kind} 没有逆")


def mcx(controls, target: int) -> Gate:
    """多控 X 门，controls 全为 |1⟩ 时翻转 target"""
    return Gate("MCX", tuple(controls) + (target,))


def rotation(kind: str, qubits, angle: float, delta: Optional[float] = None) -> Gate:
    """构造旋转门，delta 不为空时标记为合成旋转"""
    return Gate(kind, tuple(qubits), angle=float(angle), delta=delta)
