"""
优化结果可视化

把 n × ε 网格画成交互式热力图。
"""

import logging
from pathlib import Path
from typing import Optional, Union

import numpy as np
import pandas as pd
import plotly.graph_objects as go

from ..exceptions import ValidationError

logger = logging.getLogger(__name__)


def plot_state_heatmap(
    table: pd.DataFrame,
    value: str = "t_depth",
    title: str = "谐波态期望 T 深度",
    colorscale: str = "Viridis",
    width: int = 900,
    height: int = 600,
    output_path: Optional[Union[str, Path]] = None,
) -> go.Figure:
    """
    把 state_grid 的结果画成 n × log₁₀ε 热力图

    Args:
        table (pd.DataFrame): 至少包含 n、epsilon 与 value 列
        value (str, optional): 着色的列. Defaults to "t_depth".
        title (str, optional): 图表标题. Defaults to "谐波态期望 T 深度".
        colorscale (str, optional): 色阶. Defaults to "Viridis".
        width (int, optional): 图表宽度. Defaults to 900.
        height (int, optional): 图表高度. Defaults to 600.
        output_path (Optional[Union[str, Path]], optional): 给出时写出 HTML. Defaults to None.

    Returns:
        go.Figure: Plotly 图表对象

    Raises:
        ValidationError: 缺少所需的列或表为空

    Examples:
        >>> fig = plot_state_heatmap(state_grid(range(4, 8), [1e-6, 1e-9]))
        >>> fig.write_html("heatmap.html")
    """
    missing = {"n", "epsilon", value} - set(table.columns)
    if missing:
        raise ValidationError(f"表缺少列: {sorted(missing)}")
    if table.empty:
        raise ValidationError("表为空, 无法绘图")
    pivot = table.pivot_table(index="n", columns="epsilon", values=value, aggfunc="first")
    pivot = pivot.sort_index(axis=1, ascending=False)

    fig = go.Figure(go.Heatmap(
        z=pivot.to_numpy(),
        x=np.log10(pivot.columns.to_numpy(dtype=float)),
        y=pivot.index.to_numpy(),
        colorscale=colorscale,
        colorbar=dict(title=value),
        hovertemplate='<b>log₁₀ε:</b> %{x:.2f}<br><b>n:</b> %{y}<br><b>' + value + ':</b> %{z:.1f}<extra></extra>',
    ))
    fig.update_layout(
        title=dict(text=title, x=0.5, font=dict(size=16)),
        xaxis_title="log₁₀ ε",
        yaxis_title="n",
        width=width,
        height=height,
        plot_bgcolor='white',
        paper_bgcolor='white',
    )
    fig.update_xaxes(autorange="reversed", showline=True, linewidth=1, linecolor='black')
    fig.update_yaxes(showline=True, linewidth=1, linecolor='black')

    if output_path is not None:
        fig.write_html(str(output_path))
        logger.info("heatmap written to %s", output_path)
    return fig
