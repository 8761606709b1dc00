"""
并行重复直到成功的期望 T 深度统计
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import DEFAULT_SEED, MC_CHUNK_TRIALS, resolve_threads
from ..exceptions import ValidationError

logger = logging.getLogger(__name__)

MIN_TRIALS = 10_000


def rus_depth_fit(n: int) -> float:
    """拟合式 2·log₂(5n/2 + 0.92)"""
    return 2.0 * math.log2(2.5 * n + 0.92)


def single_ancilla_estimate(a: int) -> float:
    """
    单辅助比特变体的期望 T 深度 2^{a+1}（只给公式）

    Examples:
        >>> single_ancilla_estimate(3)
        16.0
    """
    if a < 0:
        raise ValidationError(f"a 不能为负: {a}")
    return float(2 ** (a + 1))


def default_component_probabilities(n: int) -> np.ndarray:
    """
    第 i 个分量使用 k = 2^i 的小部件，成功概率 1/2 + 2^{-(k+1)}

    k = 1, 2, 4, … 正是 β = 1/√2 的指数态所用的小部件；β = 1/2 对应 k = 2^{i+1}，需显式传入 probabilities。
    """
    exponents = np.minimum(2.0 ** np.arange(n), 2000.0)
    return 0.5 + 0.5 * 2.0 ** (-exponents)


def exact_parallel_depth(probabilities: Sequence[float]) -> float:
    """
    并行重复的精确期望深度 2·E[max_i G_i]，G_i ~ Geometric(p_i)

    P(max ≤ j) = Π_i (1 − (1 − p_i)^j)
    """
    p = np.asarray(probabilities, dtype=float)
    total, j = 0.0, 0
    while True:
        term = 1.0 - float(np.prod(1.0 - (1.0 - p) ** j))
        total += term
        j += 1
        if term < 1e-17 or j > 10_000:
            break
    return 2.0 * total


@dataclass(frozen=True)
class RusEstimate:
    """蒙特卡罗结果 {n, trials, mean, stderr, fit}"""

    n: int
    trials: int
    mean: float
    stderr: float
    fit: float

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


def _chunk(args: Tuple[int, int, int, np.ndarray]) -> Tuple[float, float]:
    seed, index, size, probs = args
    rng = np.random.default_rng(np.random.SeedSequence([seed, index]))
    attempts = rng.geometric(probs, size=(size, probs.size))
    depth = 2.0 * attempts.max(axis=1)
    return float(depth.sum()), float((depth ** 2).sum())


def expected_tdepth_mc(n_components: int, trials: int = 100_000, seed: int = DEFAULT_SEED,
                       probabilities: Optional[Sequence[float]] = None,
                       threads: Optional[int] = None) -> RusEstimate:
    """
    并行重复直到成功的蒙特卡罗

    每次试验中分量 i 每次尝试以 p_i 成功，试验深度为 2 × 最大尝试次数。
    试验按固定大小分块，第 c 块使用种子 (seed, c) 派生的子流，结果与线程数无关。

    Args:
        n_components (int): 分量个数
        trials (int, optional): 试验次数，至少 10^4. Defaults to 100_000.
        seed (int, optional): 种子. Defaults to DEFAULT_SEED.
        probabilities (Optional[Sequence[float]]): 每个分量的成功概率，默认 k_i = 2^i（β = 1/√2 的小部件组）
        threads (Optional[int]): 线程数

    Returns:
        RusEstimate: 均值、标准误与拟合值 2log₂(5n/2+0.92)

    Raises:
        ValidationError: 试验次数不足或概率不合法
    """
    if n_components < 1:
        raise ValidationError(f"分量个数必须为正: {n_components}")
    if trials < MIN_TRIALS:
        raise ValidationError(f"试验次数至少 {MIN_TRIALS}: {trials}")
    probs = (default_component_probabilities(n_components) if probabilities is None
             else np.asarray(probabilities, dtype=float))
    if probs.shape != (n_components,) or np.any(probs <= 0) or np.any(probs > 1):
        raise ValidationError(f"成功概率必须是 {n_components} 个 (0, 1] 内的数")
    sizes: List[int] = []
    remaining = trials
    while remaining > 0:
        sizes.append(min(MC_CHUNK_TRIALS, remaining))
        remaining -= sizes[-1]
    jobs = [(seed, i, size, probs) for i, size in enumerate(sizes)]
    workers = min(resolve_threads(threads), len(jobs))
    logger.debug("rus mc n=%d trials=%d chunks=%d workers=%d", n_components, trials, len(jobs), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_chunk, jobs))
    total = sum(p[0] for p in parts)
    total_sq = sum(p[1] for p in parts)
    mean = total / trials
    variance = max(total_sq / trials - mean ** 2, 0.0) * trials / (trials - 1)
    return RusEstimate(n_components, trials, mean, math.sqrt(variance / trials), rus_depth_fit(n_components))


def widget_tradeoff(a: int, beta: float = 0.5) -> List[Dict[str, float]]:
    """
    宽度-深度权衡表: 每个比特的 k、成功概率、辅助比特，以及两种变体的期望深度

    Returns:
        List[Dict[str, float]]: 每个比特一行，最后一行为汇总
    """
    from .exponential import ExponentialSpec

    spec = ExponentialSpec(a, beta)
    rows: List[Dict[str, float]] = []
    for i, widget in enumerate(spec.widgets):
        rows.append({"bit": i, "k": widget.k, "success_prob": widget.success_prob, "ancilla": widget.k})
    rows.append({
        "bit": -1,
        "k": 0,
        "success_prob": float(np.prod([w.success_prob for w in spec.widgets])) if a else 1.0,
        "ancilla": spec.widget_ancilla,
        "parallel_fit": rus_depth_fit(a) if a else 0.0,
        "parallel_exact": exact_parallel_depth([w.success_prob for w in spec.widgets]) if a else 0.0,
        "single_ancilla": single_ancilla_estimate(a),
        "quoted_ancilla": spec.quoted_ancilla,
    })
    return rows
