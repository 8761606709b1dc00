"""
验证套件: 在桌面规模上逐项检查各构造的不变量与拟合式
"""

import logging
from typing import Callable, Dict, List, Optional

import numpy as np

from ..circulant_block import (
    build_circulant_encoding,
    build_diag_harmonic,
    convolution_check,
    decomposition_weights,
    mean_block_error,
    predicted_block_error,
    predicted_diag_distance,
)
from ..config import DEFAULT_SEED
from ..estimator import optimize_block, optimize_state
from ..estimator.cost_model import (
    REFERENCE_BLOCK_QFT_DEPTH_SHARE,
    REFERENCE_STATE_QFT_DEPTH_SHARE,
    REFERENCE_STATE_T_DEPTH,
)
from ..exceptions import ValidationError
from ..harmonic_state import (
    build_harmonic,
    cotangent_target,
    lemma_distance,
    predicted_distance,
    required_ancilla,
)
from ..linear_prep import build_linear, linear_target, prepare_linear_state
from ..qft import (
    STATE_ERROR_BAND,
    conjugation_band,
    linear_spectrum,
    measure_conjugation_error,
    measure_state_error,
    qft_state,
)
from ..rotation_widgets import WidgetSpec, expected_tdepth_mc, simulate_widget
from ..simulator import distance

logger = logging.getLogger(__name__)

Check = Dict[str, object]

LEMMA_TOLERANCE = 0.3
QFT_DELTAS = (1e-2, 1e-3)
BLOCK_ERROR_DELTA = 1e-3
BLOCK_ERROR_BAND = (0.5, 2.0)
RUS_TOLERANCE = 0.15
CIRCULANT_ALPHA_REFERENCE = 0.1061


def _check(suite: str, name: str, value: float, bound, passed: bool) -> Check:
    if not passed:
        logger.warning("FAIL %s/%s value=%r bound=%r", suite, name, value, bound)
    else:
        logger.info("pass %s/%s", suite, name)
    return {"suite": suite, "check": name, "passed": bool(passed), "value": value, "bound": bound}


def verify_widgets(nmax: int, seed: int) -> List[Check]:
    checks = []
    for k in range(1, min(8, nmax) + 1):
        spec = WidgetSpec(k)
        state, prob = simulate_widget(k)
        err = max(abs(prob - spec.success_prob), distance(state, spec.target_state()))
        checks.append(_check("widgets", f"k={k}", err, 1e-12, err <= 1e-12))
    return checks


def verify_linear(nmax: int, seed: int) -> List[Check]:
    checks = []
    for n in (2, 4, 8):
        if n > nmax:
            continue
        result = build_linear(n).prepare(seed)
        err = distance(result.state, linear_target(n))
        checks.append(_check("linear", f"exact n={n}", err, 1e-12, err <= 1e-12))
        loss = 1.0 - result.ancilla_prob
        checks.append(_check("linear", f"clean select n={n}", loss, 1e-12, loss <= 1e-12))
    for n in range(1, min(12, nmax) + 1):
        err = distance(prepare_linear_state(n, seed).state, linear_target(n))
        checks.append(_check("linear", f"reduced n={n}", err, 1e-9, err <= 1e-9))
    return checks


def verify_cotangent(nmax: int, seed: int) -> List[Check]:
    checks = []
    for n in range(1, min(12, nmax) + 1):
        err = float(np.max(np.abs(qft_state(linear_target(n)).amps - linear_spectrum(n))))
        checks.append(_check("cotangent", f"n={n}", err, 1e-10, err <= 1e-10))
    return checks


def verify_lemmas(nmax: int, seed: int) -> List[Check]:
    """单变体拟合全网格检查；合并变体的拟合只覆盖 2m ≥ n+2（更小的 m 下 2^{n−2m} 项占主导）"""
    checks = []
    for n in range(4, min(10, nmax) + 1):
        for m in range(1, 6):
            single = lemma_distance(n, m, "single")
            combined = lemma_distance(n, m, "combined")
            ratio = single / predicted_distance(n, m, "single")
            checks.append(_check("lemmas", f"single fit n={n} m={m}", ratio, LEMMA_TOLERANCE,
                                 abs(ratio - 1.0) <= LEMMA_TOLERANCE))
            if 2 * m >= n + 2:
                ratio = combined / predicted_distance(n, m, "combined")
                checks.append(_check("lemmas", f"combined fit n={n} m={m}", ratio, LEMMA_TOLERANCE,
                                     abs(ratio - 1.0) <= LEMMA_TOLERANCE))
            checks.append(_check("lemmas", f"combined<single n={n} m={m}", combined, single, combined < single))
    for variant, expected in (("single", 25), ("combined", 14)):
        m = required_ancilla(20, 1e-10, variant)
        checks.append(_check("lemmas", f"threshold {variant} n=20", m, expected, m == expected))
    return checks


def verify_pipeline(nmax: int, seed: int) -> List[Check]:
    """n+m ≤ 12 的全部 (n, m)，|L⟩ 由线性态电路制备"""
    checks = []
    for total in range(2, min(12, nmax) + 1):
        for m in range(1, total):
            n = total - m
            result = build_harmonic(n, m, None).postselected(source="circuit", seed=seed)
            err = distance(result.state, cotangent_target(n, m))
            checks.append(_check("pipeline", f"exact n={n} m={m}", err, 1e-10, err <= 1e-10))
            if total >= 10 and n >= 7:
                checks.append(_check("pipeline", f"success n={n} m={m}", result.success_prob, 0.99,
                                     result.success_prob >= 0.99))
    return checks


def verify_qft(nmax: int, seed: int) -> List[Check]:
    checks = []
    lo, hi = STATE_ERROR_BAND
    for n in (6, 8, 10, 12):
        if n > nmax:
            continue
        for delta in QFT_DELTAS:
            ratio = measure_state_error(n, delta, seeds=50, seed=seed).ratio
            checks.append(_check("qft", f"state n={n} delta={delta:g}", ratio, [lo, hi], lo <= ratio <= hi))
    for n in (4, 6, 8):
        if n > nmax:
            continue
        lo, hi = conjugation_band(n)
        for delta in QFT_DELTAS:
            ratio = measure_conjugation_error(n, delta, seeds=50, seed=seed).ratio
            checks.append(_check("qft", f"conjugation n={n} delta={delta:g}", ratio, [lo, hi],
                                 lo <= ratio <= hi))
    return checks


def verify_rus(nmax: int, seed: int) -> List[Check]:
    checks = []
    for n in (4, 16, 64, 256):
        if n > 2 ** nmax:
            continue
        est = expected_tdepth_mc(n, 100_000, seed)
        rel = abs(est.mean / est.fit - 1.0)
        checks.append(_check("rus", f"n={n}", rel, RUS_TOLERANCE, rel <= RUS_TOLERANCE))
    return checks


def verify_convolution(nmax: int, seed: int) -> List[Check]:
    rng = np.random.default_rng(seed)
    checks = []
    for n in range(1, min(4, nmax) + 1):
        size = 2 ** n
        worst = 0.0
        for _ in range(20):
            v = rng.normal(size=size) + 1j * rng.normal(size=size)
            worst = max(worst, convolution_check(v, n).max_off_diagonal)
        checks.append(_check("convolution", f"n={n}", worst, 1e-10, worst <= 1e-10))
    return checks


def verify_circulant(nmax: int, seed: int) -> List[Check]:
    checks = []
    for n in range(3, min(6, nmax) + 1):
        residual = decomposition_weights(n)["residual"]
        checks.append(_check("circulant", f"closure n={n}", residual, 1e-10, residual <= 1e-10))
    for n in range(3, min(8, nmax) + 1):
        _, report = build_circulant_encoding(n)
        checks.append(_check("circulant", f"residual n={n}", report.distance, 1e-10, report.distance <= 1e-10))
        if n >= 6:
            rel = abs(report.alpha / CIRCULANT_ALPHA_REFERENCE - 1.0)
            checks.append(_check("circulant", f"alpha n={n}", report.alpha, CIRCULANT_ALPHA_REFERENCE, rel <= 0.05))
            target = 1.0 / (3 * 2 ** n)
            rel = abs(report.max_element / target - 1.0)
            checks.append(_check("circulant", f"max element n={n}", report.max_element, target, rel <= 0.05))
    for n in range(3, min(4, nmax) + 1):
        ratio = mean_block_error(n, BLOCK_ERROR_DELTA, seed=seed) / predicted_block_error(n, BLOCK_ERROR_DELTA)
        checks.append(_check("circulant", f"block error n={n}", ratio, list(BLOCK_ERROR_BAND),
                             BLOCK_ERROR_BAND[0] <= ratio <= BLOCK_ERROR_BAND[1]))
    return checks


def verify_diag(nmax: int, seed: int) -> List[Check]:
    checks = []
    for total in range(3, min(8, nmax) + 1):
        for m in range(2, total):
            n = total - m
            _, report = build_diag_harmonic(n, m)
            bound = 2.0 * predicted_diag_distance(n, m)
            checks.append(_check("diag", f"n={n} m={m}", report.distance, bound, report.distance <= bound))
    return checks


def verify_estimator(nmax: int, seed: int) -> List[Check]:
    checks = []
    s22 = optimize_state(22, 1e-9)
    rel = abs(s22.ledger.expected_t_depth / REFERENCE_STATE_T_DEPTH - 1.0)
    checks.append(_check("estimator", "state t_depth n=22", s22.ledger.expected_t_depth, REFERENCE_STATE_T_DEPTH,
                         rel <= 0.1))
    share = optimize_state(20, 1e-9).qft_depth_share
    checks.append(_check("estimator", "state qft share n=20", share, REFERENCE_STATE_QFT_DEPTH_SHARE,
                         0.87 <= share <= 0.97))
    share = optimize_block(20, 1e-9).qft_share
    checks.append(_check("estimator", "block qft share n=20", share, REFERENCE_BLOCK_QFT_DEPTH_SHARE,
                         0.77 <= share <= 0.87))
    return checks


SUITES: Dict[str, Callable[[int, int], List[Check]]] = {
    "widgets": verify_widgets,
    "linear": verify_linear,
    "cotangent": verify_cotangent,
    "lemmas": verify_lemmas,
    "pipeline": verify_pipeline,
    "qft": verify_qft,
    "rus": verify_rus,
    "convolution": verify_convolution,
    "circulant": verify_circulant,
    "diag": verify_diag,
    "estimator": verify_estimator,
}


def run_suite(suite: str, nmax: int = 10, seed: Optional[int] = None) -> List[Check]:
    """
    运行一个验证套件（suite="all" 时依次运行全部）

    Args:
        suite (str): 套件名
        nmax (int, optional): 规模上限. Defaults to 10.
        seed (Optional[int], optional): 随机种子. Defaults to None.

    Returns:
        List[Check]: 每项 {suite, check, passed, value, bound}

    Raises:
        ValidationError: 未知套件或 nmax < 1
    """
    if nmax < 1:
        raise ValidationError(f"nmax 必须为正: {nmax}")
    seed = DEFAULT_SEED if seed is None else seed
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise ValidationError(f"未知套件 {suite}, 可选: {['all', *SUITES]}")
    checks: List[Check] = []
    for name in names:
        checks.extend(SUITES[name](nmax, seed))
    failed = sum(not c["passed"] for c in checks)
    logger.info("verify %s: %d checks, %d failed", suite, len(checks), failed)
    return checks
