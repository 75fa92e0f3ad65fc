"""Binary-symplectic Pauli algebra, stabilizer tableaux and CSS code analysis."""

__author__ = "gadget-qec contributors"

from .code_analysis import (
    DistanceCheck,
    ErrorSet,
    KLReport,
    QHBResult,
    WeightStats,
    dataset_weight_stats,
    enumerate_errors,
    is_detectable,
    kl_sum,
    kl_value,
    n_errors_per_type,
    qhb,
    qhb_curve,
    verify_distance_at_least,
    weight_stats,
)
from .symplectic import PauliString, commutes, multiply, weight
from .tableau import (
    PauliTableau,
    StabilizerTableau,
    apply_cx,
    apply_h,
    canonical_form,
    golay_tableau,
    observation,
    propagate,
    steane_tableau,
)

__all__ = [
    "PauliString",
    "PauliTableau",
    "StabilizerTableau",
    "ErrorSet",
    "KLReport",
    "DistanceCheck",
    "QHBResult",
    "WeightStats",
    "weight",
    "commutes",
    "multiply",
    "apply_h",
    "apply_cx",
    "canonical_form",
    "observation",
    "propagate",
    "steane_tableau",
    "golay_tableau",
    "enumerate_errors",
    "n_errors_per_type",
    "is_detectable",
    "kl_sum",
    "kl_value",
    "verify_distance_at_least",
    "qhb",
    "qhb_curve",
    "weight_stats",
    "dataset_weight_stats",
]
