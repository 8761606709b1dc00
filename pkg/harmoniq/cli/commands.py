"""
子命令处理函数: 每个函数接收 RunConfig，返回一个 JSON 文档（dict）或若干行（list）
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Union

from ..circuit_core import Circuit, naive_ledger
from ..circulant_block import (
    analytic_weights,
    build_circulant_encoding,
    build_component_encoding,
    build_diag_harmonic,
    circulant_alpha,
    predicted_diag_distance,
)
from ..config import DEFAULT_SEED
from ..estimator import optimize_block, optimize_state
from ..estimator.tables import comparison_table, block_grid, state_grid
from ..exceptions import ValidationError
from ..harmonic_state import (
    build_harmonic,
    cotangent_target,
    lemma_distance,
    predicted_distance,
)
from ..linear_prep import build_linear, linear_expected_t_depth, linear_quoted_ancilla, linear_target, prepare_linear_state
from ..qft import build_approx_qft, measure_conjugation_error, measure_state_error
from ..rotation_widgets import exact_parallel_depth, expected_tdepth_mc, widget_tradeoff
from ..rotation_widgets.rus import default_component_probabilities
from ..simulator import SynthesisModel, distance

logger = logging.getLogger(__name__)

Document = Union[Dict[str, Any], List[Dict[str, Any]]]


@dataclass(frozen=True)
class RunConfig:
    """
    一次命令行运行的参数

    Attributes:
        command (str): 子命令
        n (Optional[int]): 数据比特数
        m (Optional[int]): 辅助比特数
        epsilon (Optional[float]): 目标精度
        delta (Optional[float]): 合成精度，None 表示精确旋转
        trials (Optional[int]): Monte Carlo 试验次数
        seed (int): 随机种子
        mode (str): exact 或 perturbed
        costing (str): formula 或 naive
        threads (Optional[int]): 线程数
        output (Optional[str]): 输出文件
        format (str): json 或 csv
    """

    command: str
    n: Optional[int] = None
    m: Optional[int] = None
    epsilon: Optional[float] = None
    delta: Optional[float] = None
    trials: Optional[int] = None
    seed: int = DEFAULT_SEED
    mode: str = "exact"
    costing: str = "formula"
    threads: Optional[int] = None
    output: Optional[str] = None
    format: str = "json"

    def model(self) -> SynthesisModel:
        if self.mode == "perturbed":
            return SynthesisModel.perturbed(self.seed)
        return SynthesisModel.exact()

    def require(self, *names: str) -> None:
        missing = [f"--{name}" for name in names if getattr(self, name) is None]
        if missing:
            raise ValidationError(f"{self.command} 需要参数 {', '.join(missing)}")


def _ledger(config: RunConfig, circuit: Circuit) -> Dict[str, float]:
    if config.costing == "naive":
        return naive_ledger(circuit).to_dict()
    return circuit.ledger.to_dict()


def run_state(config: RunConfig, variant: str = "combined", source: str = "analytic") -> Document:
    config.require("n", "m")
    program = build_harmonic(config.n, config.m, config.delta, combine=variant == "combined")
    result = program.postselected(0, config.model(), source, config.seed)
    return {
        "n": config.n,
        "m": config.m,
        "variant": variant,
        "source": source,
        "delta": config.delta,
        "mode": config.mode,
        "success_prob": result.success_prob,
        "distance_to_cotangent": distance(result.state, cotangent_target(config.n, config.m, variant)),
        "lemma_distance": lemma_distance(config.n, config.m, variant),
        "predicted_distance": predicted_distance(config.n, config.m, variant),
        "ledger": _ledger(config, program.circuit),
    }


def run_linear(config: RunConfig) -> Document:
    config.require("n")
    prep = prepare_linear_state(config.n, config.seed)
    program = build_linear(prep.built_qubits)
    ledger = naive_ledger(program.core).to_dict() if config.costing == "naive" else program.ledger.to_dict()
    return {
        "n": config.n,
        "built_qubits": prep.built_qubits,
        "distance": distance(prep.state, linear_target(config.n)),
        "success_prob": prep.success_prob,
        "estimated_success_prob": prep.estimated_success_prob,
        "reductions": list(prep.reductions),
        "expected_t_depth": linear_expected_t_depth(prep.built_qubits),
        "quoted_ancilla": linear_quoted_ancilla(prep.built_qubits),
        "measured_ancilla": program.measured_ancilla,
        "ledger": ledger,
    }


def run_qft(config: RunConfig, kind: str = "state", seeds: int = 64) -> Document:
    config.require("n", "delta")
    measure = measure_conjugation_error if kind == "conjugation" else measure_state_error
    result = measure(config.n, config.delta, seeds=seeds, seed=config.seed, threads=config.threads)
    doc = {"kind": kind, **result.to_dict()}
    if config.delta > 0:
        doc["ledger"] = _ledger(config, build_approx_qft(config.n, config.delta))
    return doc


def run_rus(config: RunConfig, tradeoff: bool = False, beta: float = 0.5) -> Document:
    config.require("n")
    if tradeoff:
        return widget_tradeoff(config.n, beta)
    estimate = expected_tdepth_mc(config.n, config.trials or 100_000, config.seed, threads=config.threads)
    return {
        **estimate.to_dict(),
        "exact": exact_parallel_depth(default_component_probabilities(config.n)),
        "seed": config.seed,
    }


def run_block(config: RunConfig, component: str = "CIRCULANT") -> Document:
    config.require("n")
    model = config.model()
    if component == "CIRCULANT":
        circuit, report = build_circulant_encoding(config.n, config.delta, model)
        extra = {
            "analytic_alpha": circulant_alpha(config.n),
            "analytic_weights": analytic_weights(config.n).tolist(),
        }
    else:
        circuit, report = build_component_encoding(component, config.n, config.delta, model)
        extra = {}
    ledger = _ledger(config, circuit)
    return {
        "component": component,
        "n": config.n,
        "m": 0,
        "alpha": report.alpha,
        "max_element": report.max_element,
        "distance": report.distance,
        "t_depth": ledger["t_depth"],
        **extra,
        "ledger": ledger,
    }


def run_diag(config: RunConfig, delta0: Optional[float] = None, delta1: Optional[float] = None) -> Document:
    config.require("n", "m")
    circuit, report = build_diag_harmonic(config.n, config.m, delta0, delta1, config.model())
    ledger = _ledger(config, circuit)
    return {
        "n": config.n,
        "m": config.m,
        "delta0": delta0,
        "delta1": delta1,
        "alpha": report.alpha,
        "max_element": report.max_element,
        "distance": report.distance,
        "predicted_distance": predicted_diag_distance(config.n, config.m),
        "t_depth": ledger["t_depth"],
        "ledger": ledger,
    }


def run_optimize(config: RunConfig, target: str = "state", free: bool = False) -> Document:
    config.require("n", "epsilon")
    if target == "state":
        opt = optimize_state(config.n, config.epsilon, threads=config.threads)
        return {
            **opt.to_row(),
            "target": target,
            "epsilon_achieved": opt.epsilon_achieved,
            "qft_count_share": opt.qft_count_share,
        }
    opt = optimize_block(config.n, config.epsilon, free=free, threads=config.threads)
    return {**opt.to_row(), "target": target, "free": free, "epsilon_achieved": opt.epsilon_achieved}


def run_table(config: RunConfig, kind: str = "comparison", ns: Optional[List[int]] = None,
              epsilons: Optional[List[float]] = None, plot: Optional[str] = None) -> Document:
    if kind == "comparison":
        return comparison_table(threads=config.threads)
    ns = ns or list(range(4, 25, 2))
    epsilons = epsilons or [1e-6, 1e-8, 1e-10, 1e-12]
    grid = state_grid if kind == "state" else block_grid
    table = grid(ns, epsilons, threads=config.threads)
    if plot is not None:
        if kind != "state":
            raise ValidationError("--plot 只支持 state 网格")
        from ..estimator.plotting import plot_state_heatmap

        plot_state_heatmap(table, output_path=plot)
        logger.info("heatmap written to %s", plot)
    return table.to_dict(orient="records")
