"""
结果表: 标题对比行、n × ε 网格与 CSV 导出
"""

import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

import pandas as pd

from .cost_model import (
    PRIOR_TOFFOLI_REFERENCE,
    REFERENCE_BLOCK_QFT_DEPTH_SHARE,
    REFERENCE_STATE_QFT_COUNT_SHARE,
    REFERENCE_STATE_QFT_DEPTH_SHARE,
    REFERENCE_STATE_T_DEPTH,
)
from .optimizers import optimize_block, optimize_state

logger = logging.getLogger(__name__)

TABLE_COLUMNS = (
    "n", "epsilon", "m", "delta0", "delta1", "t_depth", "t_count",
    "ancilla_clean", "ancilla_persistent", "qft_share",
)
FLOAT_FORMAT = "%.17g"


def comparison_table(threads: Optional[int] = None) -> List[Dict[str, Any]]:
    """
    标题对比: 参考数字与本优化器结果并列

    Returns:
        List[Dict[str, Any]]: 每行 {quantity, n, epsilon, reference, ours}

    Examples:
        >>> rows = comparison_table()
        >>> rows[0]["reference"]
        1700
    """
    s22 = optimize_state(22, 1e-9, threads=threads)
    s20 = optimize_state(20, 1e-9, threads=threads)
    b20 = optimize_block(20, 1e-9, threads=threads)
    rows = [
        {"quantity": "state_expected_t_depth", "n": 22, "epsilon": 1e-9,
         "reference": REFERENCE_STATE_T_DEPTH, "ours": s22.ledger.expected_t_depth},
        {"quantity": "prior_toffoli_count", "n": 22, "epsilon": 1e-9,
         "reference": PRIOR_TOFFOLI_REFERENCE, "ours": None},
        {"quantity": "state_qft_t_depth_share", "n": 20, "epsilon": 1e-9,
         "reference": REFERENCE_STATE_QFT_DEPTH_SHARE, "ours": s20.qft_depth_share},
        {"quantity": "state_qft_t_count_share", "n": 20, "epsilon": 1e-9,
         "reference": REFERENCE_STATE_QFT_COUNT_SHARE, "ours": s20.qft_count_share},
        {"quantity": "block_qft_t_depth_share", "n": 20, "epsilon": 1e-9,
         "reference": REFERENCE_BLOCK_QFT_DEPTH_SHARE, "ours": b20.qft_share},
    ]
    logger.info("comparison table: %d rows", len(rows))
    return rows


def state_grid(ns: Iterable[int], epsilons: Iterable[float], threads: Optional[int] = None) -> pd.DataFrame:
    """
    n × ε 网格上的谐波态最优点（列见 TABLE_COLUMNS）

    不可达的格点被跳过。
    """
    rows = []
    for n in ns:
        for eps in epsilons:
            try:
                rows.append(optimize_state(int(n), float(eps), threads=threads).to_row())
            except ValueError as exc:
                logger.debug("skip n=%s eps=%s: %s", n, eps, exc)
    return pd.DataFrame(rows, columns=list(TABLE_COLUMNS))


def block_grid(ns: Iterable[int], epsilons: Iterable[float], threads: Optional[int] = None) -> pd.DataFrame:
    """n × ε 网格上的块编码最优点"""
    rows = []
    for n in ns:
        for eps in epsilons:
            try:
                rows.append(optimize_block(int(n), float(eps), threads=threads).to_row())
            except ValueError as exc:
                logger.debug("skip n=%s eps=%s: %s", n, eps, exc)
    return pd.DataFrame(rows, columns=list(TABLE_COLUMNS))


def to_frame(rows: Union[pd.DataFrame, Sequence[Dict[str, Any]]]) -> pd.DataFrame:
    return rows if isinstance(rows, pd.DataFrame) else pd.DataFrame(list(rows))


def write_table_csv(rows: Union[pd.DataFrame, Sequence[Dict[str, Any]]],
                    file_path: Optional[Union[str, Path]] = None) -> str:
    """
    写入 CSV（17 位有效数字）

    Args:
        rows (Union[pd.DataFrame, Sequence[Dict[str, Any]]]): 表
        file_path (Optional[Union[str, Path]], optional): 输出文件，None 时只返回文本. Defaults to None.

    Returns:
        str: CSV 文本

    Examples:
        >>> write_table_csv([{"n": 1, "t_depth": 0.1}])
        'n,t_depth\\n1,0.10000000000000001\\n'
    """
    text = to_frame(rows).to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    if file_path is not None:
        Path(file_path).write_text(text, encoding="utf-8")
    return text


def read_table_csv(file_path: Union[str, Path]) -> pd.DataFrame:
    """读取 write_table_csv 写出的表"""
    return pd.read_csv(file_path, encoding="utf-8")
