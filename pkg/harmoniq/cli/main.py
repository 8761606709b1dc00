"""
命令行入口

    harmoniq state --n 6 --m 3
    harmoniq optimize --target state --n 22 --epsilon 1e-9
    harmoniq verify --suite lemmas --nmax 10

stdout 只输出一个 JSON 文档或 CSV；日志写到 stderr。
"""

import argparse
import json
import logging
import math
import sys
from dataclasses import fields
from pathlib import Path
from typing import Any, List, Optional, Sequence

import numpy as np

from ..circulant_block import COMPONENTS
from ..config import DEFAULT_SEED, resolve_threads
from ..estimator import write_table_csv
from ..exceptions import HarmoniqError, ValidationError, VerificationError
from . import commands
from .verify import SUITES, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_VERIFICATION = 3
LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def _optional_delta(text: str) -> Optional[float]:
    """δ 参数: 数值，或 exact/none 表示不合成"""
    if text.strip().lower() in ("exact", "none"):
        return None
    try:
        value = float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"δ 必须是数值或 exact: {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"δ 不能为负: {value}")
    return value


def _int_list(text: str) -> List[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def _float_list(text: str) -> List[float]:
    return [float(part) for part in text.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v 为 INFO，-vv 为 DEBUG")
    common.add_argument("--threads", type=int, default=None, help="工作线程数（环境变量 HARMONIQ_THREADS 优先）")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="随机种子")
    common.add_argument("--mode", choices=("exact", "perturbed"), default="exact", help="合成模型")
    common.add_argument("--costing", choices=("formula", "naive"), default="formula", help="账本模式")
    common.add_argument("--format", choices=("json", "csv"), default="json", help="输出格式")
    common.add_argument("--output", default=None, help="输出文件（默认 stdout）")

    parser = argparse.ArgumentParser(prog="harmoniq", description="谐波序列态准备与块编码的构造、验证与资源估计")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("state", parents=[common], help="谐波态流水线")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--delta", type=_optional_delta, default=None)
    p.add_argument("--variant", choices=("combined", "single"), default="combined")
    p.add_argument("--source", choices=("analytic", "circuit"), default="analytic")

    p = sub.add_parser("linear", parents=[common], help="线性态 |L⟩")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("qft", parents=[common], help="QFT 合成误差")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--kind", choices=("state", "conjugation"), default="state")
    p.add_argument("--seeds", type=int, default=64)

    p = sub.add_parser("rus", parents=[common], help="重复直到成功的期望 T 深度")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--tradeoff", action="store_true", help="输出 n 比特指数态的宽度-深度权衡表")
    p.add_argument("--beta", type=float, default=0.5)

    p = sub.add_parser("block", parents=[common], help="循环矩阵或分量块编码")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=_optional_delta, default=None)
    p.add_argument("--component", choices=("CIRCULANT",) + COMPONENTS, default="CIRCULANT")

    p = sub.add_parser("diag", parents=[common], help="对角谐波块编码")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--delta0", type=_optional_delta, default=None)
    p.add_argument("--delta1", type=_optional_delta, default=None)

    p = sub.add_parser("optimize", parents=[common], help="(m, δ) 优化")
    p.add_argument("--target", choices=("state", "block"), default="state")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--free", action="store_true", help="块编码优化时 δ₀、δ₁ 独立取值")

    p = sub.add_parser("verify", parents=[common], help="验证套件")
    p.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    p.add_argument("--nmax", type=int, default=10)

    p = sub.add_parser("table", parents=[common], help="结果表")
    p.add_argument("--kind", choices=("comparison", "state", "block"), default="comparison")
    p.add_argument("--ns", type=_int_list, default=None, help="逗号分隔的 n")
    p.add_argument("--epsilons", type=_float_list, default=None, help="逗号分隔的 ε")
    p.add_argument("--plot", default=None, help="把 state 网格画成 HTML 热力图")
    return parser


def to_jsonable(value: Any) -> Any:
    """把 numpy 标量、复数与数组转成 JSON 可表示的值；非有限浮点数写成 null"""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    if isinstance(value, (complex, np.complexfloating)):
        return [to_jsonable(value.real), to_jsonable(value.imag)]
    return value


def render(document: Any, fmt: str = "json") -> str:
    """
    把结果渲染成文本

    JSON 的浮点数使用最短往返表示，与 17 位有效数字的值完全相同；CSV 由 pandas 以 %.17g 写出。
    """
    if fmt == "csv":
        rows = document if isinstance(document, list) else [document]
        flat = [{k: json.dumps(to_jsonable(v)) if isinstance(v, (dict, list)) else to_jsonable(v)
                 for k, v in row.items()} for row in rows]
        return write_table_csv(flat)
    return json.dumps(to_jsonable(document), ensure_ascii=False, indent=2) + "\n"


def _config(args: argparse.Namespace) -> commands.RunConfig:
    names = {f.name for f in fields(commands.RunConfig)}
    values = {k: v for k, v in vars(args).items() if k in names}
    values["threads"] = resolve_threads(args.threads)
    return commands.RunConfig(**values)


def _dispatch(args: argparse.Namespace, config: commands.RunConfig) -> Any:
    if args.command == "state":
        return commands.run_state(config, args.variant, args.source)
    if args.command == "linear":
        return commands.run_linear(config)
    if args.command == "qft":
        return commands.run_qft(config, args.kind, args.seeds)
    if args.command == "rus":
        return commands.run_rus(config, args.tradeoff, args.beta)
    if args.command == "block":
        return commands.run_block(config, args.component)
    if args.command == "diag":
        return commands.run_diag(config, args.delta0, args.delta1)
    if args.command == "optimize":
        return commands.run_optimize(config, args.target, args.free)
    if args.command == "table":
        return commands.run_table(config, args.kind, args.ns, args.epsilons, args.plot)
    return run_suite(args.suite, args.nmax, config.seed)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    运行一次命令

    Returns:
        int: 0 成功；2 参数或校验错误；3 验证失败
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_VALIDATION

    logging.basicConfig(
        level=LOG_LEVELS[min(args.verbose, len(LOG_LEVELS) - 1)],
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config = _config(args)
        document = _dispatch(args, config)
        text = render(document, config.format)
    except ValidationError as exc:
        logger.error("%s", exc)
        return EXIT_VALIDATION
    except VerificationError as exc:
        logger.error("%s", exc)
        return EXIT_VERIFICATION
    except HarmoniqError as exc:
        logger.error("%s", exc)
        return EXIT_VERIFICATION

    if config.output:
        Path(config.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.command == "verify" and not all(check["passed"] for check in document):
        return EXIT_VERIFICATION
    return EXIT_OK
