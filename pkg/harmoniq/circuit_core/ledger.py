"""
资源账本 ResourceEstimate
"""

import math
from dataclasses import asdict, dataclass
from typing import Dict

from ..exceptions import ValidationError

LEDGER_FIELDS = (
    "t_count",
    "t_depth",
    "expected_t_depth",
    "clean_ancilla",
    "persistent_ancilla",
    "success_prob",
)


@dataclass(frozen=True)
class ResourceEstimate:
    """
    Clifford+T 资源估计

    T 计数允许取小数（公式是实数拟合）。拼接时各字段相加，成功概率相乘。

    Attributes:
        t_count (float): T 门总数
        t_depth (float): T 深度
        expected_t_depth (float): 期望 T 深度，重复直到成功时为 t_depth / success_prob
        clean_ancilla (int): 确定性归零的辅助比特
        persistent_ancilla (int): 需要测量成功才归零的辅助比特
        success_prob (float): 成功概率，取值 (0, 1]

    Examples:
        >>> a = ResourceEstimate(t_count=4, t_depth=2, expected_t_depth=2)
        >>> (a + a).t_count
        8.0
    """

    t_count: float = 0.0
    t_depth: float = 0.0
    expected_t_depth: float = 0.0
    clean_ancilla: int = 0
    persistent_ancilla: int = 0
    success_prob: float = 1.0

    def __post_init__(self) -> None:
        for name in LEDGER_FIELDS:
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise ValidationError(f"账本字段 {name} 必须是非负有限数: {value}")
        if not 0.0 < self.success_prob <= 1.0:
            raise ValidationError(f"success_prob 必须在 (0, 1] 内: {self.success_prob}")
        object.__setattr__(self, "t_count", float(self.t_count))
        object.__setattr__(self, "t_depth", float(self.t_depth))
        object.__setattr__(self, "expected_t_depth", float(self.expected_t_depth))

    @classmethod
    def deterministic(cls, t_count: float, t_depth: float, clean_ancilla: int = 0,
                      persistent_ancilla: int = 0) -> "ResourceEstimate":
        """确定性电路的账本，期望 T 深度等于 T 深度"""
        return cls(t_count, t_depth, t_depth, clean_ancilla, persistent_ancilla, 1.0)

    @classmethod
    def repeat_until_success(cls, t_count: float, t_depth: float, success_prob: float,
                             clean_ancilla: int = 0, persistent_ancilla: int = 0) -> "ResourceEstimate":
        """
        重复直到成功片段的账本

        Args:
            t_count (float): 单次尝试的 T 计数
            t_depth (float): 单次尝试的 T 深度
            success_prob (float): 单次成功概率

        Returns:
            ResourceEstimate: expected_t_depth = t_depth / success_prob
        """
        if not 0.0 < success_prob <= 1.0:
            raise ValidationError(f"success_prob 必须在 (0, 1] 内: {success_prob}")
        return cls(t_count, t_depth, t_depth / success_prob, clean_ancilla, persistent_ancilla, success_prob)

    def __add__(self, other: "ResourceEstimate") -> "ResourceEstimate":
        if not isinstance(other, ResourceEstimate):
            return NotImplemented
        return ResourceEstimate(
            self.t_count + other.t_count,
            self.t_depth + other.t_depth,
            self.expected_t_depth + other.expected_t_depth,
            self.clean_ancilla + other.clean_ancilla,
            self.persistent_ancilla + other.persistent_ancilla,
            self.success_prob * other.success_prob,
        )

    def with_ancilla(self, clean: int, persistent: int = 0) -> "ResourceEstimate":
        """替换辅助比特计数"""
        return ResourceEstimate(self.t_count, self.t_depth, self.expected_t_depth,
                                clean, persistent, self.success_prob)

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)
