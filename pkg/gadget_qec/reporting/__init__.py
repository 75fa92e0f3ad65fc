"""CSV-paired static reports of training runs and code datasets."""

__author__ = "gadget-qec contributors"

from .curves import downsample_curve, stack_curves, training_curves
from .figures import (
    save_figure,
    training_curve_figure,
    weight_box_figure,
    weight_curve_figure,
)

__all__ = [
    "downsample_curve",
    "training_curves",
    "stack_curves",
    "training_curve_figure",
    "weight_curve_figure",
    "weight_box_figure",
    "save_figure",
]
