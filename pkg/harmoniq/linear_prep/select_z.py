"""
SELECT 预言机 Σ_k |k⟩⟨k| ⊗ Z_k

Z_k 作用在权重为 2^k 的数据比特上（大端序下是数据量子比特 n-1-k）。
实现为受控 SWAP 路由网络: 把第 k 位搬到第 0 位，作用 Z，再搬回去。
"""

import logging
import math
from typing import List, Tuple

from ..circuit_core import Circuit, CircuitBuilder, Register, ResourceEstimate
from ..exceptions import ValidationError

logger = logging.getLogger(__name__)

MAX_SELECT_DATA = 16


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def select_width(n: int) -> int:
    """SELECT 寄存器宽度 ⌈log₂ n⌉（n=1 时为 0）"""
    return math.ceil(math.log2(n)) if n > 1 else 0


def _routing_layers(n: int) -> List[Tuple[int, List[Tuple[int, int]]]]:
    """每个选择比特 i 对应一层位置对 (p, p ⊕ 2^i)"""
    layers = []
    for i in range(select_width(n)):
        pairs = [(p, p ^ (1 << i)) for p in range(n) if not (p >> i) & 1]
        layers.append((i, pairs))
    return layers


def select_z_ledger(n: int) -> ResourceEstimate:
    """
    SELECT 的账本: 每层 n/2 个受控 SWAP，正向与反向各 ⌈log₂ n⌉ 层

    受控位扇出后每层 T 深度 2，总 T 深度 4⌈log₂ n⌉。
    """
    a = select_width(n)
    return ResourceEstimate.deterministic(t_count=4.0 * a * n, t_depth=4.0 * a)


def build_select_z(n: int) -> Circuit:
    """
    构造 SELECT-Z 电路

    Args:
        n (int): 数据比特数，必须是 2 的幂且 2 ≤ n ≤ 16

    Returns:
        Circuit: 寄存器 select(⌈log₂ n⌉) 与 data(n)，账本 T 深度 4⌈log₂ n⌉

    Raises:
        ValidationError: n 不是 2 的幂或超出范围

    Examples:
        >>> build_select_z(4).ledger.t_depth
        8.0
    """
    if not 2 <= n <= MAX_SELECT_DATA:
        raise ValidationError(f"n 必须在 [2, {MAX_SELECT_DATA}] 内: {n}")
    if not is_power_of_two(n):
        raise ValidationError(f"SELECT 要求 n 为 2 的幂, 否则会寻址到未使用的态: {n}")
    a = select_width(n)
    builder = CircuitBuilder([Register("select", 0, a), Register("data", a, n)])
    sel = builder.qubits("select")
    data = builder.qubits("data")

    def position(p: int) -> int:
        return data[n - 1 - p]

    layers = _routing_layers(n)
    for i, pairs in layers:
        for p, q in pairs:
            builder.cswap(sel[a - 1 - i], position(p), position(q))
    builder.z(position(0))
    for i, pairs in reversed(layers):
        for p, q in pairs:
            builder.cswap(sel[a - 1 - i], position(p), position(q))
    circuit = builder.build(select_z_ledger(n))
    logger.debug("select-z n=%d gates=%d", n, len(circuit))
    return circuit
