"""
全局配置常量与线程数解析
"""

import logging
import os
from typing import Optional

import numpy as np
import psutil

from .exceptions import ValidationError

logger = logging.getLogger(__name__)

# ASCII "HARM"
DEFAULT_SEED = 0x4841524D

UNITARY_QUBIT_CAP = 14
STATE_QUBIT_CAP = 26
BLOCK_QUBIT_CAP = 18
BLOCK_COLUMN_CAP = 2 ** 10
WIDGET_SIM_CAP = 20

MC_CHUNK_TRIALS = 10_000

DELTA_POINTS_PER_DECADE = 60
DELTA_MIN = 1e-16
DELTA_MAX = 1e-1
M_RANGE = (1, 40)

THREADS_ENV_VAR = "HARMONIQ_THREADS"


def delta_grid() -> np.ndarray:
    """
    返回 δ 的对数网格（从大到小）

    Returns:
        np.ndarray: 10^{-j/60}·0.1 形式的网格，覆盖 [1e-16, 1e-1]
    """
    decades = int(round(np.log10(DELTA_MAX / DELTA_MIN)))
    steps = np.arange(decades * DELTA_POINTS_PER_DECADE + 1)
    return DELTA_MAX * 10.0 ** (-steps / DELTA_POINTS_PER_DECADE)


def resolve_threads(flag: Optional[int] = None) -> int:
    """
    解析工作线程数

    优先级: 环境变量 HARMONIQ_THREADS > --threads > psutil.cpu_count() > 1

    Args:
        flag (Optional[int], optional): 命令行给出的线程数. Defaults to None.

    Returns:
        int: 线程数（至少为 1）

    Raises:
        ValidationError: 环境变量或参数不是正整数

    Examples:
        >>> resolve_threads(4)
        4
    """
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is not None and raw.strip():
        try:
            value = int(raw)
        except ValueError as exc:
            raise ValidationError(f"{THREADS_ENV_VAR} 必须是正整数: {raw!r}") from exc
        source = THREADS_ENV_VAR
    elif flag is not None:
        value = int(flag)
        source = "--threads"
    else:
        value = psutil.cpu_count(logical=True) or 1
        source = "psutil"
    if value < 1:
        raise ValidationError(f"线程数必须为正: {value}")
    logger.debug("threads=%d (source=%s)", value, source)
    return value
