"""Downsampled training curves.

Long runs log one row per epoch (and ``compare`` stacks several seeds); the curves
are reduced with MinMax-preselected LTTB before they are drawn or exported, which
keeps the extremes and the visual shape of every curve.
"""

from __future__ import annotations

__author__ = "gadget-qec contributors"

from typing import Dict, Sequence, Tuple

import numpy as np
import pandas as pd
from tsdownsample import MinMaxLTTBDownsampler

DEFAULT_METRICS = ("mean_normalized_return", "success_rate")
CURVE_COLUMNS = ["label", "metric", "epoch", "value"]


def downsample_curve(
    x: np.ndarray, y: np.ndarray, n_out: int = 500, minmax_ratio: int = 4
) -> Tuple[np.ndarray, np.ndarray]:
    """Reduce ``(x, y)`` to at most ``n_out`` points; NaN values are dropped.

    Parameters
    ----------
    x: np.ndarray
        Monotonically increasing positions (epochs).
    y: np.ndarray
        The metric values.
    n_out: int, optional
        Number of points to keep, by default 500. Must be >= 3.
    minmax_ratio: int, optional
        Size of the MinMax preselection relative to ``n_out``, by default 4.

    """
    if n_out < 3:
        raise ValueError(f"n_out must be >= 3, got {n_out}")
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise ValueError("x and y must have the same shape")
    keep = ~np.isnan(y)
    x, y = x[keep], y[keep]
    if len(y) <= n_out:
        return x, y
    idx = MinMaxLTTBDownsampler().downsample(
        np.ascontiguousarray(x),
        np.ascontiguousarray(y),
        n_out=n_out,
        minmax_ratio=minmax_ratio,
    )
    return x[idx], y[idx]


def training_curves(
    log: pd.DataFrame,
    metrics: Sequence[str] = DEFAULT_METRICS,
    n_out: int = 500,
    label: str = "run",
) -> pd.DataFrame:
    """Long-format downsampled curves (``label, metric, epoch, value``) of a log."""
    missing = [m for m in metrics if m not in log.columns]
    if missing:
        raise KeyError(f"log has no column(s) {missing}")
    frames = []
    for metric in metrics:
        x, y = downsample_curve(
            log["epoch"].to_numpy(), log[metric].to_numpy(), n_out=n_out
        )
        frames.append(
            pd.DataFrame({"label": label, "metric": metric, "epoch": x, "value": y})
        )
    if not frames:
        return pd.DataFrame(columns=CURVE_COLUMNS)
    return pd.concat(frames, ignore_index=True)[CURVE_COLUMNS]


def stack_curves(
    logs: Dict[str, pd.DataFrame],
    metric: str = "mean_normalized_return",
    n_out: int = 500,
) -> pd.DataFrame:
    """Curves of one metric for several labelled runs (e.g. level sets x seeds)."""
    frames = [
        training_curves(log, (metric,), n_out=n_out, label=label)
        for label, log in logs.items()
    ]
    if not frames:
        return pd.DataFrame(columns=CURVE_COLUMNS)
    return pd.concat(frames, ignore_index=True)
