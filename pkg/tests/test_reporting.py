import numpy as np
import pandas as pd
import plotly.graph_objects as go
import pytest

from gadget_qec.gadgets import weight_curve
from gadget_qec.reporting import (
    downsample_curve,
    save_figure,
    stack_curves,
    training_curve_figure,
    training_curves,
    weight_box_figure,
    weight_curve_figure,
)
from gadget_qec.reporting import figures
from gadget_qec.reporting.curves import CURVE_COLUMNS


@pytest.fixture
def long_log():
    epochs = np.arange(5000)
    return pd.DataFrame(
        {
            "epoch": epochs,
            "mean_normalized_return": np.tanh(epochs / 1000) + 0.01 * np.sin(epochs),
            "success_rate": (epochs > 3000).astype(float),
        }
    )


def test_downsample_keeps_extremes_and_ends():
    x = np.arange(10_000)
    y = np.sin(x / 300.0)
    y[1234] = 5.0
    xs, ys = downsample_curve(x, y, n_out=200)
    assert len(xs) == 200
    assert np.all(np.diff(xs) > 0)
    assert xs[0] == 0 and xs[-1] == 9999
    assert 5.0 in ys


def test_downsample_short_and_nan():
    x = np.arange(5.0)
    y = np.array([1.0, np.nan, 3.0, 4.0, 5.0])
    xs, ys = downsample_curve(x, y, n_out=10)
    assert xs.tolist() == [0.0, 2.0, 3.0, 4.0]
    assert ys.tolist() == [1.0, 3.0, 4.0, 5.0]


@pytest.mark.parametrize("n_out, y", [(2, np.zeros(5)), (10, np.zeros(4))])
def test_downsample_validation(n_out, y):
    with pytest.raises(ValueError):
        downsample_curve(np.arange(5), y, n_out=n_out)


def test_training_curves(long_log):
    curves = training_curves(long_log, n_out=100)
    assert list(curves.columns) == CURVE_COLUMNS
    assert set(curves["metric"]) == {"mean_normalized_return", "success_rate"}
    assert curves.groupby("metric").size().tolist() == [100, 100]
    with pytest.raises(KeyError):
        training_curves(long_log, metrics=("entropy",))


def test_stack_curves(long_log):
    stacked = stack_curves({"cx": long_log, "cx,dcx8": long_log.iloc[:50]}, n_out=100)
    assert stacked.groupby("label").size().to_dict() == {"cx": 100, "cx,dcx8": 50}
    assert stack_curves({}).empty


def test_figures(long_log):
    fig = training_curve_figure(training_curves(long_log, n_out=100))
    assert len(fig.data) == 2
    assert isinstance(fig.data[0], go.Scattergl)
    assert len(weight_curve_figure(weight_curve([1, 2, 3])).data) == 2
    box = weight_box_figure({"a": [4, 4, 6], "b": [8, 8]})
    assert [trace.name for trace in box.data] == ["a", "b"]


def test_save_figure_falls_back_to_html(tmp_path, monkeypatch):
    monkeypatch.setattr(figures, "_kaleido_installed", False)
    fig = weight_curve_figure(weight_curve([1, 2]))
    with pytest.warns(UserWarning, match="kaleido"):
        path = save_figure(fig, tmp_path / "plots" / "curve.svg")
    assert path == tmp_path / "plots" / "curve.html"
    assert path.exists()
