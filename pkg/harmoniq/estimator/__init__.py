"""
代价公式、(m, δ) 优化器与结果表
"""

from .cost_model import (
    CIRCULANT_ITEMS,
    CostModel,
    block_error,
    block_t_depth,
    circulant_item_sum,
    circulant_items,
    circulant_t_depth,
    harmonic_cost,
    incrementer_t_depth,
    linear_t_count,
    mcx_t_depth,
    qft_phase_gradient_note,
    state_error,
)
from .optimizers import BlockOptimum, StateOptimum, optimize_block, optimize_state
from .tables import (
    TABLE_COLUMNS,
    block_grid,
    comparison_table,
    read_table_csv,
    state_grid,
    write_table_csv,
)

__all__ = [
    "CIRCULANT_ITEMS",
    "CostModel",
    "block_error",
    "block_t_depth",
    "circulant_item_sum",
    "circulant_items",
    "circulant_t_depth",
    "harmonic_cost",
    "incrementer_t_depth",
    "linear_t_count",
    "mcx_t_depth",
    "qft_phase_gradient_note",
    "state_error",
    "BlockOptimum",
    "StateOptimum",
    "optimize_block",
    "optimize_state",
    "TABLE_COLUMNS",
    "block_grid",
    "comparison_table",
    "read_table_csv",
    "state_grid",
    "write_table_csv",
]
