"""
Clifford+T 近似 QFT 电路

受控 S、受控 T 两层是精确的；d ≥ 4 的受控旋转以精度 δ 合成。
"""

import logging
import math
from typing import Optional

from ..circuit_core import Circuit, CircuitBuilder, Register, ResourceEstimate, rotation_t_cost
from ..exceptions import ValidationError

logger = logging.getLogger(__name__)

MAX_DELTA = 0.1
EXACT_LAYERS = 2
# 受控 S / 受控 T 各自的 T 计数
CS_T_COUNT = 3.0
CT_T_COUNT = 5.0
# 受控旋转在单个合成旋转之外的 T 开销（受控 SWAP 路由）
CONTROLLED_OVERHEAD = 4.0


def qft_t_depth(n: int, delta: float) -> float:
    """
    T 深度 (n−3)(1.15·log₂(1/δ) + 13.2) + 7；n < 3 时为精确电路的 2 (n=2) 或 0

    Examples:
        >>> round(qft_t_depth(10, 1e-9), 1)
        340.1
    """
    if n >= 3:
        return (n - 3) * (rotation_t_cost(delta) + CONTROLLED_OVERHEAD) + 7.0
    return 2.0 if n == 2 else 0.0


def synthesized_rotation_count(n: int) -> int:
    """d ≥ 4 的受控旋转个数 (n−3)(n−2)/2"""
    return max(n - 3, 0) * max(n - 2, 0) // 2


def qft_t_count(n: int, delta: float) -> float:
    """T 计数: 合成旋转各计一次旋转加两个 Toffoli 对，CS 与 CT 按精确分解计"""
    synthesized = synthesized_rotation_count(n) * (rotation_t_cost(delta) + 2 * CONTROLLED_OVERHEAD)
    return synthesized + CS_T_COUNT * max(n - 1, 0) + CT_T_COUNT * max(n - 2, 0)


def qft_ledger(n: int, delta: float) -> ResourceEstimate:
    """QFT 的公式账本，合成旋转借用一个干净辅助比特"""
    return ResourceEstimate.deterministic(
        qft_t_count(n, delta), qft_t_depth(n, delta), clean_ancilla=1 if n >= 4 else 0
    )


def _check_delta(delta: float) -> None:
    if not 0.0 < delta <= MAX_DELTA:
        raise ValidationError(f"δ 必须在 (0, {MAX_DELTA}] 内: {delta}")


def build_approx_qft(n: int, delta: Optional[float] = 1e-10) -> Circuit:
    """
    构造标准分层 QFT（最高位在前，末尾交换比特，输出为标准顺序）

    Args:
        n (int): 量子比特数
        delta (Optional[float], optional): 合成精度，None 表示全部按精确门构造. Defaults to 1e-10.

    Returns:
        Circuit: 单一 data 寄存器的电路；n < 3 时退化为精确 Clifford+T 电路

    Raises:
        ValidationError: n < 1 或 δ 超出 (0, 0.1]

    Examples:
        >>> build_approx_qft(3, 1e-3).ledger.t_depth
        7.0
    """
    if n < 1:
        raise ValidationError(f"n 必须为正: {n}")
    if delta is not None:
        _check_delta(delta)
    if n < 3:
        logger.info("QFT n=%d 没有合成旋转, 使用精确电路", n)
    builder = CircuitBuilder([Register("data", 0, n)])
    for j in range(n):
        builder.h(j)
        for target in range(j + 1, n):
            d = target - j + 1
            synth = delta if d > EXACT_LAYERS + 1 else None
            builder.crz(target, j, 2 * math.pi / 2 ** d, synth)
    for i in range(n // 2):
        builder.swap(i, n - 1 - i)
    # 不合成时旋转不是 Clifford+T 门，账本留空
    ledger = qft_ledger(n, delta) if delta is not None else ResourceEstimate()
    circuit = builder.build(ledger)
    logger.debug("qft n=%d delta=%s gates=%d t_depth=%.3f", n, delta, len(circuit), ledger.t_depth)
    return circuit
