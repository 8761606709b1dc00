"""
逐门代价与朴素分层计数

公式模式（构造器标注的账本）是结果的依据；这里的朴素模式只作参考。
"""

import math
from collections import Counter
from typing import Dict, Optional, Tuple

from ..exceptions import ValidationError
from .gates import ROTATION_KINDS, Gate
from .ledger import ResourceEstimate

CLIFFORD_KINDS = ("H", "X", "Y", "Z", "S", "Sdg", "CX", "CZ", "SWAP", "Measure")
TOFFOLI_PAIR = (4.0, 2.0)
LONE_TOFFOLI = (7.0, 3.0)


def rotation_t_cost(delta: float) -> float:
    """合成单个旋转的 T 计数与 T 深度 1.15·log₂(1/δ)+9.2"""
    if not 0.0 < delta < 1.0:
        raise ValidationError(f"δ 必须在 (0, 1) 内: {delta}")
    return 1.15 * math.log2(1.0 / delta) + 9.2


def cost_of_gate(kind: str, delta: Optional[float] = None, width: int = 1,
                 controls: int = 0) -> Tuple[float, float]:
    """
    单个门的 (T 计数, T 深度) 贡献

    Args:
        kind (str): 门类型
        delta (Optional[float], optional): 合成精度，仅合成旋转需要. Defaults to None.
        width (int, optional): MCX 的控制数或加一器的宽度. Defaults to 1.
        controls (int, optional): 额外控制位数量，每个按一个 Toffoli 对计. Defaults to 0.

    Returns:
        Tuple[float, float]: (t_count, t_depth)。CCX/CSWAP 按一个计算/反计算对计 (4, 2)

    Raises:
        ValidationError: 旋转门缺少 δ，或非旋转门给出 δ

    Examples:
        >>> cost_of_gate("CH")
        (2.0, 2.0)
        >>> round(cost_of_gate("Rz", 1e-9)[0], 1)
        43.6
    """
    if kind in ROTATION_KINDS:
        if delta is None:
            raise ValidationError(f"合成旋转 {kind} 缺少 δ")
        cost = rotation_t_cost(delta)
        base = (cost, cost)
    elif delta is not None:
        raise ValidationError(f"{kind} 不是合成旋转, 不接受 δ")
    elif kind in CLIFFORD_KINDS:
        base = (0.0, 0.0)
    elif kind in ("T", "Tdg"):
        base = (1.0, 1.0)
    elif kind == "CH":
        base = (2.0, 2.0)
    elif kind in ("CCX", "CSWAP"):
        base = TOFFOLI_PAIR
    elif kind == "MCX":
        k = max(int(width), 1)
        base = (4.0 * (k - 1), 2.0 * math.ceil(math.log2(k))) if k > 1 else (0.0, 0.0)
    elif kind in ("Incrementer", "Decrementer"):
        w = max(int(width), 1)
        base = (8.0 * w, 4.0 * w + 4.0)
    else:
        raise ValidationError(f"未知的门类型: {kind}")
    return base[0] + TOFFOLI_PAIR[0] * controls, base[1] + TOFFOLI_PAIR[1] * controls


def _gate_cost(gate: Gate, lone: bool) -> Tuple[float, float]:
    if gate.kind in ("CCX", "CSWAP"):
        count, depth = LONE_TOFFOLI if lone else (TOFFOLI_PAIR[0] / 2, TOFFOLI_PAIR[1] / 2)
        return count + TOFFOLI_PAIR[0] * len(gate.controls), depth + TOFFOLI_PAIR[1] * len(gate.controls)
    if gate.kind in ROTATION_KINDS and gate.delta is None:
        # 未标记合成的旋转按精确门处理
        return TOFFOLI_PAIR[0] * len(gate.controls), TOFFOLI_PAIR[1] * len(gate.controls)
    width = len(gate.qubits) - 1 if gate.kind == "MCX" else len(gate.qubits)
    return cost_of_gate(gate.kind, gate.delta, width=width, controls=len(gate.controls))


def naive_ledger(circuit) -> ResourceEstimate:
    """
    朴素模式账本: 对 T 类门按不相交量子比特贪心分层

    同一组量子比特上的 CCX/CSWAP 两两配成计算/反计算对，各计 (2, 1)；
    落单的 Toffoli 计 (7, 3)。不带 δ 的旋转是精确模式下的理想门，只按额外控制位计 Toffoli 对，
    本身计 0 个 T。

    Args:
        circuit (Circuit): 待计数的电路

    Returns:
        ResourceEstimate: 确定性账本
    """
    occurrences = Counter(
        (g.kind, g.all_qubits) for g in circuit.gates if g.kind in ("CCX", "CSWAP")
    )
    seen: Dict[tuple, int] = Counter()
    layer = [0.0] * circuit.width
    t_count = 0.0
    for gate in circuit.gates:
        lone = False
        if gate.kind in ("CCX", "CSWAP"):
            key = (gate.kind, gate.all_qubits)
            seen[key] += 1
            paired = 2 * (occurrences[key] // 2)
            lone = seen[key] > paired
        count, depth = _gate_cost(gate, lone)
        touched = gate.all_qubits
        start = max(layer[q] for q in touched)
        t_count += count
        for q in touched:
            layer[q] = start + depth
    return ResourceEstimate.deterministic(t_count, max(layer, default=0.0))
