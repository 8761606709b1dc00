"""
命令行前端: 子命令、验证套件与 JSON/CSV 输出
"""

from .commands import RunConfig
from .main import build_parser, main, render, to_jsonable
from .verify import SUITES, run_suite

__all__ = [
    "RunConfig",
    "build_parser",
    "main",
    "render",
    "to_jsonable",
    "SUITES",
    "run_suite",
]
