"""
(m, δ) 网格搜索优化器

δ 取 60 点/十倍频程的对数网格，m 取 [1, 40] 的整数；结果与线程数无关。
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional

import numpy as np

from ..circuit_core import ResourceEstimate
from ..config import M_RANGE, delta_grid, resolve_threads
from ..exceptions import InfeasibleTargetError, ValidationError
from ..qft import qft_t_depth
from .cost_model import (
    block_error,
    block_t_depth,
    circulant_t_depth,
    harmonic_cost,
    harmonic_t_count_terms,
    harmonic_t_depth_terms,
    state_error,
)

logger = logging.getLogger(__name__)

STATE_EPSILON_RANGE = (1e-14, 1e-1)
MAX_TOTAL_QUBITS = 40


@dataclass(frozen=True)
class StateOptimum:
    """谐波态的最优网格点"""

    n: int
    epsilon: float
    m: int
    delta: float
    epsilon_achieved: float
    ledger: ResourceEstimate
    qft_depth_share: float
    qft_count_share: float

    def to_row(self) -> Dict[str, float]:
        return {
            "n": self.n,
            "epsilon": self.epsilon,
            "m": self.m,
            "delta0": self.delta,
            "delta1": self.delta,
            "t_depth": self.ledger.expected_t_depth,
            "t_count": self.ledger.t_count,
            "ancilla_clean": self.ledger.clean_ancilla,
            "ancilla_persistent": self.ledger.persistent_ancilla,
            "qft_share": self.qft_depth_share,
        }


@dataclass(frozen=True)
class BlockOptimum:
    """对角谐波块编码的最优网格点"""

    n: int
    epsilon: float
    m: int
    delta0: float
    delta1: float
    epsilon_achieved: float
    t_depth: float
    qft_share: float
    free: bool = False

    def to_row(self) -> Dict[str, float]:
        row = asdict(self)
        row.pop("free")
        row.pop("epsilon_achieved")
        # 块编码优化只给出 T 深度
        return {**row, "t_count": None, "ancilla_clean": None, "ancilla_persistent": None}


def _check_epsilon(epsilon: float) -> None:
    low, high = STATE_EPSILON_RANGE
    if not low < epsilon < high:
        raise ValidationError(f"ε 必须在 ({low}, {high}) 内: {epsilon}")


def _m_values(n: int) -> List[int]:
    low, high = M_RANGE
    return [m for m in range(low, high + 1) if n + m <= MAX_TOTAL_QUBITS]


def _best_state_delta(n: int, m: int, epsilon: float, grid: np.ndarray) -> Optional[float]:
    """该 m 下满足误差预算的最大 δ（T 深度随 δ 单调不增）"""
    feasible = [d for d in grid if state_error(n, m, d) <= epsilon]
    return max(feasible) if feasible else None


def optimize_state(n: int, epsilon: float, threads: Optional[int] = None) -> StateOptimum:
    """
    谐波态准备的 (m, δ) 优化

    目标为期望 T 深度: 线性态 + QFT（均在 n+m 比特上）+ MCX + 受控加一器；
    约束 √3/2^{n+m+1/2} + ((n+m)/2 − 4/3)δ ≤ ε。同值时取最小的 m，再取最大的 δ。

    Args:
        n (int): 数据比特数
        epsilon (float): 目标误差，(1e-14, 1e-1)
        threads (Optional[int], optional): 线程数. Defaults to None.

    Returns:
        StateOptimum: 最优点

    Raises:
        ValidationError: ε 超出范围
        InfeasibleTargetError: 需要 n+m > 40

    Examples:
        >>> optimize_state(20, 1e-10).m
        14
    """
    if n < 1:
        raise ValidationError(f"n 必须为正: {n}")
    _check_epsilon(epsilon)
    grid = delta_grid()
    ms = _m_values(n)
    with ThreadPoolExecutor(max_workers=resolve_threads(threads)) as pool:
        deltas = list(pool.map(lambda m: _best_state_delta(n, m, epsilon, grid), ms))
    best = None
    for m, delta in zip(ms, deltas):
        if delta is None:
            continue
        depth = harmonic_cost(n, m, delta).expected_t_depth
        if best is None or depth < best[0]:
            best = (depth, m, delta)
    if best is None:
        raise InfeasibleTargetError(f"ε={epsilon} 在 n+m ≤ {MAX_TOTAL_QUBITS} 内不可达 (n={n})")
    _, m, delta = best
    ledger = harmonic_cost(n, m, delta)
    depth_terms = harmonic_t_depth_terms(n, m, delta)
    count_terms = harmonic_t_count_terms(n, m, delta)
    result = StateOptimum(
        n=n,
        epsilon=epsilon,
        m=m,
        delta=float(delta),
        epsilon_achieved=state_error(n, m, delta),
        ledger=ledger,
        qft_depth_share=depth_terms["qft"] / sum(depth_terms.values()),
        qft_count_share=count_terms["qft"] / sum(count_terms.values()),
    )
    logger.info("optimize_state n=%d eps=%g -> m=%d delta=%.3e t_depth=%.1f",
                n, epsilon, m, delta, ledger.expected_t_depth)
    return result


def _block_for_m(n: int, m: int, epsilon: float, grid: np.ndarray, free: bool):
    total = n + m
    budget = epsilon - math.pi / 2.0 ** total
    if budget <= 0:
        return None
    err0 = 2.0 * (2.0 / 3.0) * total * grid
    err1 = (total / 5.0 + 4.0) * grid
    cost1 = np.array([circulant_t_depth(total, d) for d in grid])
    if not free:
        # δ₀ = 2δ₁
        d0 = 2.0 * grid
        ok = (d0 < 1.0) & (2.0 * (2.0 / 3.0) * total * d0 + err1 <= budget)
        if not ok.any():
            return None
        cost = np.array([2.0 * qft_t_depth(total, d) if d < 1.0 else np.inf for d in d0]) + cost1
        cost = np.where(ok, cost, np.inf)
        j = int(np.argmin(cost))
        return float(cost[j]), float(d0[j]), float(grid[j])
    cost0 = np.array([2.0 * qft_t_depth(total, d) for d in grid])
    ok = err0[:, None] + err1[None, :] <= budget
    if not ok.any():
        return None
    cost = np.where(ok, cost0[:, None] + cost1[None, :], np.inf)
    i, j = np.unravel_index(int(np.argmin(cost)), cost.shape)
    return float(cost[i, j]), float(grid[i]), float(grid[j])


def optimize_block(n: int, epsilon: float, free: bool = False,
                   threads: Optional[int] = None) -> BlockOptimum:
    """
    对角谐波块编码的 (m, δ₀, δ₁) 优化

    目标 2·qft(n+m, δ₀) + circulant(n+m, δ₁)，约束
    π/2^{n+m} + 2·(2/3)(n+m)δ₀ + ((n+m)/5 + 4)δ₁ ≤ ε。默认强制 δ₀ = 2δ₁，free=True 时两者独立取网格值。

    Raises:
        ValidationError: ε 超出范围
        InfeasibleTargetError: 需要 n+m > 40
    """
    if n < 1:
        raise ValidationError(f"n 必须为正: {n}")
    _check_epsilon(epsilon)
    grid = delta_grid()
    ms = _m_values(n)
    with ThreadPoolExecutor(max_workers=resolve_threads(threads)) as pool:
        found = list(pool.map(lambda m: _block_for_m(n, m, epsilon, grid, free), ms))
    best = None
    for m, item in zip(ms, found):
        if item is not None and (best is None or item[0] < best[0]):
            best = (item[0], m, item[1], item[2])
    if best is None:
        raise InfeasibleTargetError(f"ε={epsilon} 在 n+m ≤ {MAX_TOTAL_QUBITS} 内不可达 (n={n})")
    depth, m, d0, d1 = best
    result = BlockOptimum(
        n=n,
        epsilon=epsilon,
        m=m,
        delta0=d0,
        delta1=d1,
        epsilon_achieved=block_error(n, m, d0, d1),
        t_depth=block_t_depth(n, m, d0, d1),
        qft_share=2.0 * qft_t_depth(n + m, d0) / depth,
        free=free,
    )
    logger.info("optimize_block n=%d eps=%g free=%s -> m=%d d0=%.3e d1=%.3e t_depth=%.1f",
                n, epsilon, free, m, d0, d1, depth)
    return result
