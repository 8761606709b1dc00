"""
线性循环矩阵 C 的 LCU 块编码

C = diag(ℓ̃)·𝟏 + 𝟏·diag(ℓ̃) − ((N−1)/2)·(D + X^{⊗n})，ℓ̃_i = (N−1)/2 − i。
四项分别由 diag{L}·𝟏、𝟏·diag{L}、D 与 X^{⊗n} 的块编码实现，
PREP 权重由各项实际的块对 C 做最小二乘求得；左侧 PREP 带符号。
"""

import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..circuit_core import Circuit, CircuitBuilder, Gate, Register, ResourceEstimate, naive_ledger
from ..config import DEFAULT_SEED
from ..estimator.cost_model import circulant_t_depth
from ..exceptions import CapExceededError, ValidationError, VerificationError
from ..linear_prep import select_width
from ..qft import linear_circulant_norm
from ..simulator import SynthesisModel, block_of, spectral_norm
from .components import BlockEncodingReport, build_component_circuit, component_ancilla, extract_block, report_for
from .lcu import index_bits, inverse_gates, remap, state_prep_gates
from .targets import centered_index, target_matrix

logger = logging.getLogger(__name__)

TERMS = ("DIAG_L*ONES", "ONES*DIAG_L", "D", "XN")
SELECT_QUBITS = 2
MAX_CIRCULANT_QUBITS = 8
WEIGHT_RESIDUAL_TOLERANCE = 1e-8
FORMULA_DELTA = 1e-10


def term_matrices(n: int) -> List[np.ndarray]:
    """四项的目标矩阵 diag(ℓ̃)𝟏、𝟏diag(ℓ̃)、D、X^{⊗n}"""
    size = 2 ** n
    diag = np.diag(centered_index(n))
    ones = np.ones((size, size))
    return [diag @ ones, ones @ diag, target_matrix("D", n), target_matrix("XN", n)]


def _solve(columns: List[np.ndarray], target: np.ndarray) -> Tuple[np.ndarray, float]:
    system = np.stack([c.reshape(-1) for c in columns], axis=1).astype(complex)
    rhs = target.reshape(-1).astype(complex)
    weights, *_ = np.linalg.lstsq(system, rhs, rcond=None)
    residual = float(np.max(np.abs(system @ weights - rhs)))
    return weights, residual


def decomposition_weights(n: int) -> Dict[str, object]:
    """
    把 C 分解到四个目标矩阵上

    Returns:
        Dict[str, object]: {"weights": 约为 [1, 1, −(N−1)/2, −(N−1)/2], "residual": 逐元素最大残差}

    Examples:
        >>> [round(w, 9) for w in decomposition_weights(2)["weights"]]
        [1.0, 1.0, -1.5, -1.5]
    """
    weights, residual = _solve(term_matrices(n), target_matrix("CIRCULANT", n))
    return {"weights": [float(w.real) for w in weights], "residual": residual}


def diag_l_closed_form_check(n: int) -> Dict[str, float]:
    """
    比较 LCU 实现的 diag{L}（2ℓ̃/(N−1)，仿射且递减）与引用闭式 1 − (1−2i)/N

    两者都对 i 仿射；只记录截距、斜率及其比值，不做断言。
    """
    size = 2 ** n
    i = np.arange(size, dtype=float)
    ours = np.diag(target_matrix("DIAG_L", n))
    printed = 1.0 - (1.0 - 2.0 * i) / size
    ours_fit = np.polyfit(i, ours, 1)
    printed_fit = np.polyfit(i, printed, 1)
    return {
        "ours_slope": float(ours_fit[0]),
        "ours_intercept": float(ours_fit[1]),
        "printed_slope": float(printed_fit[0]),
        "printed_intercept": float(printed_fit[1]),
        "slope_ratio": float(ours_fit[0] / printed_fit[0]),
        "ours_affine_residual": float(np.max(np.abs(np.polyval(ours_fit, i) - ours))),
    }


def analytic_weights(n: int) -> np.ndarray:
    """各项块编码下的 LCU 权重: N(N−1)/2, N(N−1)/2, −(N²−1)/2, −(N−1)/2"""
    size = 2 ** n
    half = size * (size - 1) / 2
    return np.array([half, half, -(size ** 2 - 1) / 2, -(size - 1) / 2])


def circulant_alpha(n: int) -> float:
    """
    子归一化 α = ‖C‖₂ / Σ|w|，Σ|w| = (N−1)(3N+2)/2

    Examples:
        >>> round(circulant_alpha(6), 4)
        0.1067
    """
    return linear_circulant_norm(n) / float(np.abs(analytic_weights(n)).sum())


def _term_gates(term: str, n: int, delta: Optional[float]) -> List[Gate]:
    """辅助池编号从 0 开始，数据紧随其后"""
    pool = select_width(n) + 2

    def placed(which: str, offset: int) -> List[Gate]:
        anc = component_ancilla(which, n)
        mapping = {i: offset + i for i in range(anc)}
        mapping.update({anc + j: pool + j for j in range(n)})
        return remap(build_component_circuit(which, n, delta).gates, mapping)

    ones_anc = component_ancilla("ONES", n)
    if term == "DIAG_L*ONES":
        return placed("ONES", 0) + placed("DIAG_L", ones_anc)
    if term == "ONES*DIAG_L":
        return placed("DIAG_L", ones_anc) + placed("ONES", 0)
    if term == "D":
        return placed("D", 0)
    if term == "XN":
        return placed("XN", 0)
    raise ValidationError(f"未知的项 {term}, 可选: {TERMS}")


def term_circuit(term: str, n: int, delta: Optional[float] = None) -> Circuit:
    """单独一项的块编码电路，寄存器为 ancilla(⌈log₂ n⌉+2) 与 data(n)"""
    pool = select_width(n) + 2
    registers = [Register("ancilla", 0, pool, "clean"), Register("data", pool, n)]
    return Circuit(pool + n, registers, _term_gates(term, n, delta))


def solve_lcu_weights(n: int, delta: Optional[float] = None) -> Tuple[np.ndarray, float]:
    """
    以各项实际的块（精确模拟）为基，对 C 求 LCU 权重

    Raises:
        VerificationError: 残差过大或权重带虚部
    """
    blocks = [extract_block(term_circuit(t, n, delta)) for t in TERMS]
    target = target_matrix("CIRCULANT", n)
    weights, residual = _solve(blocks, target)
    scale = float(np.abs(target).max())
    if residual > WEIGHT_RESIDUAL_TOLERANCE * scale or np.max(np.abs(weights.imag)) > WEIGHT_RESIDUAL_TOLERANCE * scale:
        raise VerificationError(f"LCU 权重求解失败: n={n}, 残差 {residual:.3e}")
    return weights.real, residual


def build_circulant_circuit(n: int, delta: Optional[float] = None,
                            weights: Optional[np.ndarray] = None) -> Circuit:
    """
    构造 C 的块编码电路，寄存器为 select(2)、ancilla(⌈log₂ n⌉+2) 与 data(n)

    Raises:
        CapExceededError: n 超出 [1, 8]
    """
    if not 1 <= n <= MAX_CIRCULANT_QUBITS:
        raise CapExceededError(f"循环块编码要求 1 ≤ n ≤ {MAX_CIRCULANT_QUBITS}: {n}")
    if weights is None:
        weights, _ = solve_lcu_weights(n, delta)
    weights = np.asarray(weights, dtype=float)
    pool = select_width(n) + 2
    builder = CircuitBuilder([
        Register("select", 0, SELECT_QUBITS, "clean"),
        Register("ancilla", SELECT_QUBITS, pool, "clean"),
        Register("data", SELECT_QUBITS + pool, n),
    ])
    select = list(builder.qubits("select"))
    shift = {q: q + SELECT_QUBITS for q in range(pool + n)}
    right = np.sqrt(np.abs(weights) / np.abs(weights).sum())
    left = np.where(weights < 0, -1.0, 1.0) * right
    builder.extend(state_prep_gates(builder.registers, select, right, delta))
    for t, term in enumerate(TERMS):
        with builder.controlled_on(select, index_bits(t, SELECT_QUBITS)):
            builder.extend(remap(_term_gates(term, n, delta), shift))
    builder.extend(inverse_gates(state_prep_gates(builder.registers, select, left, delta)))
    circuit = builder.build()
    depth = circulant_t_depth(max(n, 2), delta if delta is not None else FORMULA_DELTA)
    ledger = ResourceEstimate.repeat_until_success(
        naive_ledger(circuit).t_count, depth, circulant_alpha(n) ** 2, clean_ancilla=SELECT_QUBITS + pool,
    )
    logger.debug("circulant n=%d gates=%d weights=%s", n, len(circuit), weights)
    return circuit.with_ledger(ledger)


def circulant_ancilla(circuit: Circuit) -> Tuple[int, ...]:
    return circuit.qubits("select") + circuit.qubits("ancilla")


def linear_circulant_unit(n: int) -> np.ndarray:
    """谱范数归一化的 C"""
    return target_matrix("CIRCULANT", n) / linear_circulant_norm(n)


def build_circulant_encoding(n: int, delta: Optional[float] = None,
                             model: Optional[SynthesisModel] = None) -> Tuple[Circuit, BlockEncodingReport]:
    """
    构造 C 的块编码并与单位范数 C 比较

    Args:
        n (int): 数据比特数，1 ≤ n ≤ 8
        delta (Optional[float], optional): 合成精度. Defaults to None.
        model (Optional[SynthesisModel], optional): 合成模型. Defaults to None.

    Returns:
        Tuple[Circuit, BlockEncodingReport]: alpha 等于 circulant_alpha(n)，最大元素为 1/(3N+2)

    Raises:
        CapExceededError: n 超出范围
        VerificationError: 权重求解失败
    """
    circuit = build_circulant_circuit(n, delta)
    block = block_of(circuit, circulant_ancilla(circuit), model)
    report = report_for(block, linear_circulant_unit(n))
    logger.info("circulant n=%d alpha=%.6f max=%.3e residual=%.3e",
                n, report.alpha, report.max_element, report.distance)
    return circuit, report


def perturbed_block_error(n: int, delta: float, seed: int, circuit: Optional[Circuit] = None) -> float:
    """
    单个扰动实例下归一化块编码的偏差 ‖noisy − exact‖₂ / α

    块本身是 α·C/‖C‖，除以 α 后与单位范数 C 的编码误差同量纲。
    """
    circuit = circuit or build_circulant_circuit(n, delta)
    anc = circulant_ancilla(circuit)
    exact = block_of(circuit, anc)
    noisy = block_of(circuit, anc, SynthesisModel.perturbed(seed, delta))
    return spectral_norm(noisy - exact) / circulant_alpha(n)


def mean_block_error(n: int, delta: float, seeds: int = 10, seed: int = DEFAULT_SEED) -> float:
    """
    多个扰动实例上 perturbed_block_error 的平均值

    Raises:
        ValidationError: δ 不在 (0, 0.1] 内或 seeds < 1
    """
    if not 0.0 < delta <= 0.1:
        raise ValidationError(f"δ 必须在 (0, 0.1] 内: {delta}")
    if seeds < 1:
        raise ValidationError(f"seeds 必须为正: {seeds}")
    circuit = build_circulant_circuit(n, delta)
    stream = np.random.SeedSequence(seed).generate_state(seeds)
    values = [perturbed_block_error(n, delta, int(s), circuit) for s in stream]
    result = float(np.mean(values))
    logger.debug("block error n=%d delta=%g mean=%.3e predicted=%.3e", n, delta, result,
                 predicted_block_error(n, delta))
    return result


def predicted_block_error(n: int, delta: float) -> float:
    """(n/5 + 4)·δ"""
    return (n / 5.0 + 4.0) * delta
