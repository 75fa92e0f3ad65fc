"""**gadget_qec**: discovering CSS encoding circuits with gadget-augmented RL."""

from .config import TrainConfig, load_config
from .environment import Circuit, CodeDiscoveryEnv, EnvConfig, VectorEnv, read_circuit
from .gadgets import enumerate_actions, make_gadget, rule_table
from .pipeline import dedup, motif_frequencies, normalize
from .stabilizer import (
    PauliString,
    StabilizerTableau,
    enumerate_errors,
    kl_sum,
    qhb,
    verify_distance_at_least,
)
from .trainer import CurriculumSchedule, run_curriculum

__docformat__ = "numpy"
__author__ = "gadget-qec contributors"
__version__ = "0.1.0"

__all__ = [
    "__version__",
    "PauliString",
    "StabilizerTableau",
    "enumerate_errors",
    "kl_sum",
    "verify_distance_at_least",
    "qhb",
    "make_gadget",
    "rule_table",
    "enumerate_actions",
    "Circuit",
    "read_circuit",
    "EnvConfig",
    "CodeDiscoveryEnv",
    "VectorEnv",
    "TrainConfig",
    "load_config",
    "CurriculumSchedule",
    "run_curriculum",
    "dedup",
    "normalize",
    "motif_frequencies",
]
