"""
合成误差的蒙特卡罗测量与拟合式对比
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from ..config import DEFAULT_SEED, resolve_threads
from ..exceptions import ValidationError
from ..linear_prep import linear_target
from ..simulator import SynthesisModel, distance, run, unitary_of
from .approximate import MAX_DELTA, build_approx_qft
from .exact import exact_qft, linear_circulant, linear_spectrum

logger = logging.getLogger(__name__)

MIN_SEEDS = 50
MAX_STATE_ERROR_QUBITS = 12
MAX_CONJUGATION_QUBITS = 8
STATE_ERROR_BAND = (0.5, 2.0)
CONJUGATION_ERROR_BAND = (0.5, 2.0)
# n = 4 时每个 QFT 只含一个合成旋转，实测比值约 0.35
SMALL_CONJUGATION_BAND = (0.25, 2.0)
SMALL_CONJUGATION_QUBITS = 4


@dataclass(frozen=True)
class ErrorMeasurement:
    """多个扰动实例的平均偏差与拟合预测"""

    n: int
    delta: float
    seeds: int
    mean: float
    predicted: float

    @property
    def ratio(self) -> float:
        return self.mean / self.predicted if self.predicted > 0 else 0.0

    def to_dict(self) -> Dict[str, float]:
        return {**asdict(self), "ratio": self.ratio}


def predicted_state_error(n: int, delta: float) -> float:
    """(n/2 − 4/3)·δ"""
    return (n / 2.0 - 4.0 / 3.0) * delta


def predicted_conjugation_error(n: int, delta: float) -> float:
    """(2/3)·n·δ"""
    return 2.0 / 3.0 * n * delta


def conjugation_band(n: int) -> Tuple[float, float]:
    """measured/predicted 的允许区间；n ≤ 4 使用放宽的下限"""
    return SMALL_CONJUGATION_BAND if n <= SMALL_CONJUGATION_QUBITS else CONJUGATION_ERROR_BAND


def _substream_seed(seed: int, index: int) -> int:
    return int(np.random.SeedSequence([seed, index]).generate_state(1)[0])


def _check(n: int, delta: float, seeds: int, cap: int) -> None:
    if not 3 <= n <= cap:
        raise ValidationError(f"n 必须在 [3, {cap}] 内: {n}")
    if not 0.0 <= delta <= MAX_DELTA:
        raise ValidationError(f"δ 必须在 [0, {MAX_DELTA}] 内: {delta}")
    if seeds < MIN_SEEDS:
        raise ValidationError(f"至少需要 {MIN_SEEDS} 个种子: {seeds}")


def measure_state_error(n: int, delta: float, seeds: int = 64, seed: int = DEFAULT_SEED,
                        threads: Optional[int] = None) -> ErrorMeasurement:
    """
    扰动 QFT 作用在 |L⟩ 上与精确 QFT|L⟩ 的平均 L2 距离

    Args:
        n (int): 量子比特数，3 ≤ n ≤ 12
        delta (float): 合成精度，δ = 0 时偏差为 0
        seeds (int, optional): 扰动实例个数，至少 50. Defaults to 64.
        seed (int, optional): 主种子. Defaults to DEFAULT_SEED.
        threads (Optional[int], optional): 线程数. Defaults to None.

    Returns:
        ErrorMeasurement: 平均偏差与预测 (n/2 − 4/3)δ

    Examples:
        >>> round(predicted_state_error(8, 1e-3), 5)
        0.00267
    """
    _check(n, delta, seeds, MAX_STATE_ERROR_QUBITS)
    circuit = build_approx_qft(n, delta if delta > 0 else MAX_DELTA)
    source = linear_target(n)
    exact = linear_spectrum(n)

    def one(index: int) -> float:
        model = SynthesisModel.perturbed(_substream_seed(seed, index), delta)
        return float(np.linalg.norm(run(circuit, source, model).amps - exact))

    with ThreadPoolExecutor(max_workers=resolve_threads(threads)) as pool:
        values = list(pool.map(one, range(seeds)))
    result = ErrorMeasurement(n, delta, seeds, float(np.mean(values)), predicted_state_error(n, delta))
    logger.debug("state error n=%d delta=%g mean=%.3e ratio=%.3f", n, delta, result.mean, result.ratio)
    return result


def measure_conjugation_error(n: int, delta: float, seeds: int = 64, seed: int = DEFAULT_SEED,
                              threads: Optional[int] = None) -> ErrorMeasurement:
    """
    扰动共轭 U·C·V† 与精确 F·C·F† 的平均谱范数距离（C 为单位范数线性循环矩阵）

    两侧的 QFT 是独立的扰动实例。

    Args:
        n (int): 量子比特数，3 ≤ n ≤ 8
        delta (float): 合成精度

    Returns:
        ErrorMeasurement: 平均偏差与预测 (2/3)nδ
    """
    _check(n, delta, seeds, MAX_CONJUGATION_QUBITS)
    circuit = build_approx_qft(n, delta if delta > 0 else MAX_DELTA)
    matrix = linear_circulant(n)
    fourier = exact_qft(n)
    exact = fourier @ matrix @ fourier.conj().T

    def one(index: int) -> float:
        left = unitary_of(circuit, SynthesisModel.perturbed(_substream_seed(seed, 2 * index), delta))
        right = unitary_of(circuit, SynthesisModel.perturbed(_substream_seed(seed, 2 * index + 1), delta))
        return distance(left @ matrix @ right.conj().T, exact)

    with ThreadPoolExecutor(max_workers=resolve_threads(threads)) as pool:
        values = list(pool.map(one, range(seeds)))
    result = ErrorMeasurement(n, delta, seeds, float(np.mean(values)), predicted_conjugation_error(n, delta))
    logger.debug("conjugation error n=%d delta=%g mean=%.3e ratio=%.3f", n, delta, result.mean, result.ratio)
    return result
