"""
闭式代价与误差公式

所有构造器的公式模式账本和优化器都从这里取值。
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, Mapping, Tuple

from ..circuit_core import ResourceEstimate, cost_of_gate, rotation_t_cost
from ..exceptions import ValidationError
from ..linear_prep import linear_expected_t_depth, select_width
from ..qft import qft_t_count, qft_t_depth

logger = logging.getLogger(__name__)

PRIOR_TOFFOLI_REFERENCE = 11_000
REFERENCE_STATE_T_DEPTH = 1_700
REFERENCE_STATE_QFT_DEPTH_SHARE = 0.92
REFERENCE_STATE_QFT_COUNT_SHARE = 0.98
REFERENCE_BLOCK_QFT_DEPTH_SHARE = 0.82
CIRCULANT_CONSTANT = 94.1


def _log2_inv(delta: float) -> float:
    if not 0.0 < delta < 1.0:
        raise ValidationError(f"δ 必须在 (0, 1) 内: {delta}")
    return math.log2(1.0 / delta)


def _clog2(n: int) -> int:
    return math.ceil(math.log2(n)) if n > 1 else 0


def linear_t_count(n: int) -> float:
    """直接构造 2^⌈log₂ n⌉ 比特时 SELECT 与小部件的 T 计数"""
    a = select_width(n)
    p = 2 ** a
    return 4.0 * a * p + 4.0 * (p - 1)


def mcx_t_depth(n: int) -> float:
    """n+1 控制位 MCX 的 T 深度 4⌈log₂(n+1)⌉"""
    return 4.0 * _clog2(n + 1)


def incrementer_t_depth(n: int) -> float:
    """受控加一器 4n + 4"""
    return 4.0 * n + 4.0


def circulant_t_depth(n: int, delta: float) -> float:
    """
    循环块编码 T 深度 6.9·log₂(1/δ) + 8n + 24·log₂ n + 94.1

    Examples:
        >>> round(circulant_t_depth(20, 1e-9), 1)
        564.1
    """
    return 6.9 * _log2_inv(delta) + 8.0 * n + 24.0 * math.log2(n) + CIRCULANT_CONSTANT


def _log_term(x: float, continuous: bool) -> float:
    return math.log2(x) if continuous else float(math.ceil(math.log2(x)))


# 循环块编码的八个分项: (名称, 公式(n, δ, 连续对数?))
CIRCULANT_ITEMS: Tuple[Tuple[str, Callable[[int, float, bool], float]], ...] = (
    ("prep_layers", lambda n, d, c: 4.6 * _log2_inv(d) + 41.4),
    # 切换受控基态只计一个 Toffoli 对
    ("control_cycling", lambda n, d, c: 2.0),
    ("controlled_grover", lambda n, d, c: 4.0 * _log_term(n + 1, c) + 8.0),
    ("double_controlled_swaps", lambda n, d, c: 4.0 * _log_term(n, c) + 4.0),
    ("double_controlled_r", lambda n, d, c: 2.3 * _log2_inv(d) + 20.7),
    ("h_accumulator", lambda n, d, c: 4.0 * _log_term(n, c) + 6.0),
    ("x_accumulator", lambda n, d, c: 4.0 * _log_term(n, c)),
    ("incrementer", lambda n, d, c: 8.0 * n - 4.0),
)
# 受控 Grover 与 H 累加器各出现两次，另有一个额外控制的 Toffoli 对
ITEM_MULTIPLICITY = {"controlled_grover": 2, "h_accumulator": 2}
EXTRA_CONTROL_PAIR = 2.0


def circulant_items(n: int, delta: float, continuous: bool = False) -> Dict[str, float]:
    """
    循环块编码的八个分项 T 深度

    Args:
        n (int): 数据比特数
        delta (float): 合成精度
        continuous (bool, optional): True 用连续对数代替取整. Defaults to False.

    Examples:
        >>> circulant_items(4, 1e-9)["incrementer"]
        28.0
        >>> circulant_items(7, 1e-9)["controlled_grover"]
        20.0
    """
    if n < 2:
        raise ValidationError(f"n 至少为 2: {n}")
    return {name: float(fn(n, delta, continuous)) for name, fn in CIRCULANT_ITEMS}


def circulant_item_sum(n: int, delta: float, continuous: bool = True) -> float:
    """按出现次数加总八个分项，与 circulant_t_depth 的差来自取整与 log₂(n+1) ≈ log₂ n"""
    items = circulant_items(n, delta, continuous)
    total = sum(value * ITEM_MULTIPLICITY.get(name, 1) for name, value in items.items())
    return total + EXTRA_CONTROL_PAIR


def harmonic_t_depth_terms(n: int, m: int, delta: float) -> Dict[str, float]:
    """谐波态流水线各段的期望 T 深度"""
    total = n + m
    return {
        "linear": linear_expected_t_depth(total),
        "qft": qft_t_depth(total, delta),
        "mcx": mcx_t_depth(n),
        "incrementer": incrementer_t_depth(n),
    }


def harmonic_t_count_terms(n: int, m: int, delta: float) -> Dict[str, float]:
    total = n + m
    return {
        "linear": linear_t_count(total),
        "qft": qft_t_count(total, delta),
        "mcx": cost_of_gate("MCX", width=n + 1)[0],
        "incrementer": cost_of_gate("Incrementer", width=n)[0],
    }


def harmonic_cost(n: int, m: int, delta: float) -> ResourceEstimate:
    """
    谐波态流水线的公式账本

    Returns:
        ResourceEstimate: 干净辅助比特为 m、选择寄存器与 QFT 借用位；持久辅助比特为小部件
    """
    if n < 1 or m < 1:
        raise ValidationError(f"需要 n ≥ 1 且 m ≥ 1: n={n}, m={m}")
    depth = sum(harmonic_t_depth_terms(n, m, delta).values())
    count = sum(harmonic_t_count_terms(n, m, delta).values())
    a = select_width(n + m)
    return ResourceEstimate(
        t_count=count,
        t_depth=depth,
        expected_t_depth=depth,
        clean_ancilla=m + a + 1,
        persistent_ancilla=2 * (2 ** a - 1),
    )


def state_error(n: int, m: int, delta: float) -> float:
    """√3/2^{n+m+1/2} + ((n+m)/2 − 4/3)·δ"""
    total = n + m
    return math.sqrt(3.0) / 2.0 ** (total + 0.5) + (total / 2.0 - 4.0 / 3.0) * delta


def block_error(n: int, m: int, delta0: float, delta1: float) -> float:
    """π/2^{n+m} + 2·(2/3)(n+m)δ₀ + ((n+m)/5 + 4)δ₁"""
    total = n + m
    return math.pi / 2.0 ** total + 2.0 * (2.0 / 3.0) * total * delta0 + (total / 5.0 + 4.0) * delta1


def block_t_depth(n: int, m: int, delta0: float, delta1: float) -> float:
    """2·qft(n+m, δ₀) + circulant(n+m, δ₁)"""
    total = n + m
    return 2.0 * qft_t_depth(total, delta0) + circulant_t_depth(total, delta1)


def qft_phase_gradient_note() -> str:
    """相位梯度 QFT 的备注（仅供参考，不参与优化）"""
    return (
        "phase-gradient QFT: each controlled rotation becomes an addition into a "
        "phase-gradient register, trading synthesized rotations for adder T-depth; "
        "not used by the optimizers"
    )


@dataclass(frozen=True)
class CostModel:
    """
    命名公式表

    Examples:
        >>> CostModel().evaluate("incrementer_item", {"n": 4})
        28.0
    """

    def formulas(self) -> Mapping[str, Callable[..., float]]:
        return {
            "rotation": lambda delta: rotation_t_cost(delta),
            "qft": lambda n, delta: qft_t_depth(int(n), delta),
            "linear": lambda n: linear_expected_t_depth(int(n)),
            "mcx": lambda n: mcx_t_depth(int(n)),
            "incrementer": lambda n: incrementer_t_depth(int(n)),
            "circulant": lambda n, delta: circulant_t_depth(int(n), delta),
            "circulant_item_sum": lambda n, delta: circulant_item_sum(int(n), delta),
            "incrementer_item": lambda n, delta=1e-9: circulant_items(int(n), delta)["incrementer"],
            "controlled_grover": lambda n, delta=1e-9: circulant_items(int(n), delta)["controlled_grover"],
            "state_error": lambda n, m, delta: state_error(int(n), int(m), delta),
            "block_error": lambda n, m, delta0, delta1: block_error(int(n), int(m), delta0, delta1),
        }

    def evaluate(self, formula: str, params: Mapping[str, float]) -> float:
        """
        按名称求值

        Raises:
            ValidationError: 未知公式或参数不合法
        """
        table = self.formulas()
        if formula not in table:
            raise ValidationError(f"未知公式 {formula}, 可选: {sorted(table)}")
        if any(isinstance(v, (int, float)) and v < 0 for v in params.values()):
            raise ValidationError(f"参数不能为负: {dict(params)}")
        try:
            value = float(table[formula](**params))
        except TypeError as exc:
            raise ValidationError(f"公式 {formula} 的参数不匹配: {dict(params)}") from exc
        logger.debug("evaluate %s(%s) = %.17g", formula, dict(params), value)
        return value
