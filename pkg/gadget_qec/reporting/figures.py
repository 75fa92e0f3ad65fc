"""Static plotly charts: training curves, propagated-weight curve, weight box plots."""

from __future__ import annotations

__author__ = "gadget-qec contributors"

import warnings
from pathlib import Path
from typing import Dict, Optional, Sequence, Union

import numpy as np
import pandas as pd
import plotly.graph_objects as go

try:
    import kaleido  # noqa: F401

    _kaleido_installed = True
except ImportError:
    _kaleido_installed = False

_LAYOUT = dict(template="plotly_white", width=720, height=420)


def training_curve_figure(
    curves: pd.DataFrame, title: Optional[str] = None
) -> go.Figure:
    """One line per ``(label, metric)`` of a :func:`training_curves` frame."""
    fig = go.Figure()
    for (label, metric), group in curves.groupby(["label", "metric"], sort=False):
        fig.add_trace(
            go.Scattergl(
                x=group["epoch"],
                y=group["value"],
                mode="lines",
                name=f"{label} {metric}" if label != "run" else metric,
            )
        )
    fig.update_layout(
        title=title or "training", xaxis_title="epoch", yaxis_title="value", **_LAYOUT
    )
    return fig


def weight_curve_figure(curve: pd.DataFrame) -> go.Figure:
    """Maximal propagated weight against gadget size ``m`` (with ``m / 2``)."""
    m = curve["m"].to_numpy()
    fig = go.Figure(
        [
            go.Scatter(x=m, y=curve["max_weight"], mode="lines+markers", name="max"),
            go.Scatter(
                x=m, y=m / 2, mode="lines", name="m/2", line=dict(dash="dash")
            ),
        ]
    )
    fig.update_layout(
        title="maximal propagated weight",
        xaxis_title="gadget size m",
        yaxis_title="weight",
        xaxis_type="log",
        **_LAYOUT,
    )
    return fig


def weight_box_figure(weights: Dict[str, Sequence[int]]) -> go.Figure:
    """One box of generator weights per labelled dataset."""
    fig = go.Figure(
        [
            go.Box(y=np.asarray(values), name=str(label), boxmean="sd")
            for label, values in weights.items()
        ]
    )
    fig.update_layout(
        title="generator weights", yaxis_title="weight", showlegend=False, **_LAYOUT
    )
    return fig


def save_figure(fig: go.Figure, path: Union[str, Path]) -> Path:
    """Write ``fig`` as SVG; falls back to HTML when kaleido is not installed.

    Returns
    -------
    Path
        The file that was written.

    """
    path = Path(path).with_suffix(".svg")
    path.parent.mkdir(parents=True, exist_ok=True)
    if _kaleido_installed:
        fig.write_image(str(path), format="svg")
        return path
    warnings.warn(
        "'kaleido' is not installed, writing the figure as HTML instead of SVG "
        "(pip install gadget-qec[static])",
        UserWarning,
    )
    path = path.with_suffix(".html")
    fig.write_html(str(path), include_plotlyjs="cdn")
    return path
