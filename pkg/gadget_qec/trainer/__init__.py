"""MAXPPO actor-critic training and the distance curriculum."""

__author__ = "gadget-qec contributors"

from .checkpoint import load_checkpoint, save_checkpoint
from .curriculum import (
    CurriculumResult,
    CurriculumSchedule,
    compare_levels,
    evaluate_greedy,
    run_curriculum,
)
from .maxppo import (
    PolicyValueNets,
    max_return_targets,
    policy_loss_and_grad,
    ppo_update,
    value_loss_and_grad,
)
from .mlp import MLP
from .optimizers import SGD, AbstractOptimizer, RMSProp
from .rollout import TrajectoryBatch, collect

__all__ = [
    "MLP",
    "AbstractOptimizer",
    "RMSProp",
    "SGD",
    "PolicyValueNets",
    "TrajectoryBatch",
    "collect",
    "max_return_targets",
    "policy_loss_and_grad",
    "value_loss_and_grad",
    "ppo_update",
    "CurriculumSchedule",
    "CurriculumResult",
    "run_curriculum",
    "evaluate_greedy",
    "compare_levels",
    "save_checkpoint",
    "load_checkpoint",
]
