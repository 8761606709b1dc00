"""
harmoniq: 谐波序列态准备与块编码的量子线路工具包

包含精确旋转态小部件、线性态准备、近似 QFT、谐波态流水线、
线性循环矩阵与对角谐波矩阵的块编码，以及 T 深度代价模型与参数优化器。
所有构造都可以在稠密态矢量模拟器上与解析目标逐一比对。
"""

__version__ = "0.1.0"

from . import circuit_core
from . import simulator
from . import rotation_widgets
from . import linear_prep
from . import qft
from . import estimator
from . import harmonic_state
from . import circulant_block
from .exceptions import (
    CapExceededError,
    CircuitParseError,
    HarmoniqError,
    ImpossibleOutcomeError,
    InfeasibleTargetError,
    RegisterMismatchError,
    ValidationError,
    VerificationError,
)

__all__ = [
    "circuit_core",
    "simulator",
    "rotation_widgets",
    "linear_prep",
    "qft",
    "estimator",
    "harmonic_state",
    "circulant_block",
    "HarmoniqError",
    "ValidationError",
    "CapExceededError",
    "RegisterMismatchError",
    "CircuitParseError",
    "ImpossibleOutcomeError",
    "InfeasibleTargetError",
    "VerificationError",
]
