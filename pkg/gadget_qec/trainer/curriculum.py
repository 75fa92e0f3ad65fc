"""Distance curriculum driver, greedy evaluation and the level-speedup experiment."""

from __future__ import annotations

__author__ = "gadget-qec contributors"

import warnings
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from ..config import TrainConfig
from ..environment.circuit import Circuit
from ..environment.code_env import CodeDiscoveryEnv
from ..environment.env_config import EnvConfig
from ..environment.vector_env import VectorEnv
from .maxppo import PolicyValueNets, max_return_targets, ppo_update
from .optimizers import RMSProp
from .rollout import collect

LOG_COLUMNS = [
    "epoch",
    "stage_d",
    "mean_normalized_return",
    "success_rate",
    "mean_episode_length",
    "n_episodes",
    "n_successes",
    "policy_loss",
    "value_loss",
    "entropy",
    "approx_kl",
    "clip_frac",
]


@dataclass(frozen=True)
class CurriculumSchedule:
    """Ordered ``(distance, epochs)`` stages; the last one is the target distance."""

    stages: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if not self.stages:
            raise ValueError("a curriculum needs at least one stage")
        distances = [d for d, _ in self.stages]
        if distances[0] < 2:
            raise ValueError(
                f"the first stage distance must be >= 2, got {distances[0]}"
            )
        if any(b <= a for a, b in zip(distances, distances[1:])):
            raise ValueError(f"stage distances must strictly increase: {distances}")
        if any(epochs < 1 for _, epochs in self.stages):
            raise ValueError(f"every stage needs >= 1 epoch: {self.stages}")

    @classmethod
    def for_target(
        cls, d: int, epochs: int, epochs_per_stage: Optional[int] = None
    ) -> CurriculumSchedule:
        """Stages ``max(3, d - 2) .. d`` (a single stage when ``d < 3``).

        Every stage but the last gets ``epochs_per_stage`` epochs (by default an
        equal share of ``epochs``); the last stage gets the remainder.
        """
        start = max(3, d - 2) if d >= 3 else d
        distances = list(range(start, d + 1))
        if epochs_per_stage is None:
            epochs_per_stage = max(1, epochs // len(distances))
        early = [(dist, epochs_per_stage) for dist in distances[:-1]]
        remaining = max(1, epochs - epochs_per_stage * len(early))
        return cls(tuple(early) + ((distances[-1], remaining),))

    @property
    def target(self) -> int:
        return self.stages[-1][0]

    @property
    def total_epochs(self) -> int:
        return sum(epochs for _, epochs in self.stages)


@dataclass
class CurriculumResult:
    nets: PolicyValueNets
    circuits: List[Circuit]
    log: pd.DataFrame
    target_d: int
    epochs_to_success: Dict[int, Optional[int]]
    stopped_early: bool = False
    summary: Dict[str, object] = field(default_factory=dict)

    @property
    def target_circuits(self) -> List[Circuit]:
        return [c for c in self.circuits if c.d == self.target_d]

    @property
    def success(self) -> bool:
        return bool(self.target_circuits)


def _print(verbose: bool, *values) -> None:
    if verbose:
        print(*values)


def build_nets(cfg: TrainConfig, n_actions: int, obs_size: int, rng) -> PolicyValueNets:
    return PolicyValueNets(obs_size, n_actions, cfg.hidden, cfg.activation, rng)


def run_curriculum(
    schedule: CurriculumSchedule,
    cfg: TrainConfig,
    nets: Optional[PolicyValueNets] = None,
    seed: Optional[int] = None,
) -> CurriculumResult:
    """Train stage by stage, carrying the networks across stages.

    The error set (and so the reward) is rebuilt for each stage distance. A
    non-final stage advances early once its epoch success rate reaches
    ``cfg.stage_success_threshold``; the final stage stops once
    ``cfg.min_discoveries`` target-distance circuits were found (when
    ``cfg.stop_on_success``). Without any success or improvement of the best
    normalized return for ``cfg.patience`` epochs the run stops with a warning.

    Parameters
    ----------
    schedule: CurriculumSchedule
        The stages; its target must equal ``cfg.d``.
    cfg: TrainConfig
        The run configuration.
    nets: PolicyValueNets, optional
        Networks to continue training; fresh ones when None.
    seed: int, optional
        Seed of the run, by default ``cfg.seed``.

    """
    if schedule.target != cfg.d:
        raise ValueError(f"schedule targets d={schedule.target}, config d={cfg.d}")
    seed = cfg.seed if seed is None else seed
    rng = np.random.default_rng(seed)
    venv = VectorEnv(cfg.env_config(schedule.stages[0][0]), cfg.n_envs, cfg.workers)
    if nets is None:
        nets = build_nets(cfg, venv.n_actions, venv.obs_size, rng)
    actor_opt = RMSProp(nets.actor.parameters(), cfg.lr, cfg.rms_decay)
    critic_opt = RMSProp(nets.critic.parameters(), cfg.lr, cfg.rms_decay)

    records: List[dict] = []
    circuits: List[Circuit] = []
    epochs_to_success: Dict[int, Optional[int]] = {d: None for d, _ in schedule.stages}
    epoch, stopped_early, done = 0, False, False
    best_return, since_improvement = -np.inf, 0
    try:
        for stage_idx, (stage_d, stage_epochs) in enumerate(schedule.stages):
            final_stage = stage_idx == len(schedule.stages) - 1
            venv.set_distance(stage_d)
            _print(cfg.verbose, f"[stage d={stage_d}] up to {stage_epochs} epochs")
            for _ in range(stage_epochs):
                batch = collect(nets, venv, cfg.rollout_len, rng)
                targets = max_return_targets(batch.rewards, batch.dones, cfg.gamma)
                stats = ppo_update(
                    nets,
                    batch,
                    targets,
                    actor_opt,
                    critic_opt,
                    clip=cfg.clip,
                    epochs=cfg.ppo_epochs,
                    minibatch=cfg.minibatch,
                    entropy_coef=cfg.entropy_coef,
                    value_coef=cfg.value_coef,
                    normalize_advantages=cfg.normalize_advantages,
                    max_grad_norm=cfg.max_grad_norm,
                    rng=rng,
                )
                found = batch.successful_circuits()
                circuits += found
                record = {
                    "epoch": epoch,
                    "stage_d": stage_d,
                    "mean_normalized_return": batch.mean_normalized_return(),
                    "success_rate": batch.success_rate(),
                    "mean_episode_length": batch.mean_episode_length(),
                    "n_episodes": batch.n_episodes,
                    "n_successes": len(found),
                    **{key: stats[key] for key in LOG_COLUMNS[7:]},
                }
                records.append(record)
                _print(
                    cfg.verbose,
                    f"epoch {epoch:5d} d={stage_d} "
                    f"return={record['mean_normalized_return']:.3f} "
                    f"success={record['success_rate']:.2f}",
                )
                epoch += 1

                if found and epochs_to_success[stage_d] is None:
                    epochs_to_success[stage_d] = epoch
                improved = bool(found)
                mean_return = record["mean_normalized_return"]
                if np.isfinite(mean_return) and mean_return > best_return:
                    best_return, improved = mean_return, True
                since_improvement = 0 if improved else since_improvement + 1

                n_target = sum(c.d == schedule.target for c in circuits)
                if final_stage:
                    if cfg.stop_on_success and n_target >= cfg.min_discoveries:
                        done = True
                        break
                elif batch.success_rate() >= cfg.stage_success_threshold:
                    break
                if since_improvement >= cfg.patience:
                    warnings.warn(
                        f"no success or improvement for {cfg.patience} epochs at "
                        f"d={stage_d}; stopping with partial results",
                        UserWarning,
                    )
                    stopped_early = done = True
                    break
            if done:
                break
    finally:
        venv.close()

    log = pd.DataFrame.from_records(records, columns=LOG_COLUMNS)
    summary = {
        "seed": seed,
        "target_d": schedule.target,
        "epochs": epoch,
        "n_circuits": len(circuits),
        "n_target_circuits": sum(c.d == schedule.target for c in circuits),
        "epochs_to_success": {str(d): e for d, e in epochs_to_success.items()},
        "stopped_early": stopped_early,
        "config_hash": cfg.config_hash(),
    }
    return CurriculumResult(
        nets, circuits, log, schedule.target, epochs_to_success, stopped_early, summary
    )


def evaluate_greedy(
    nets: PolicyValueNets, env_cfg: EnvConfig
) -> Tuple[Circuit, bool, float]:
    """Run one argmax-policy episode; returns the circuit, success and return."""
    env = CodeDiscoveryEnv(env_cfg)
    obs = env.reset()
    done = False
    while not done:
        action = int(nets.logits(obs[None, :].astype(np.float64))[0].argmax())
        obs, _, done, _ = env.step(action)
    return env.export_circuit(), env.state.success, env.state.total_reward


def compare_levels(
    cfg: TrainConfig,
    level_sets: Iterable[Sequence],
    seeds: Sequence[int],
) -> Tuple[pd.DataFrame, pd.DataFrame]:
    """Epochs to the first target-distance success per gadget level set and seed.

    Returns the per-run table and the per-level-set summary (median epochs, runs
    without success are excluded from the median and counted separately).
    """
    runs = []
    for levels in level_sets:
        run_cfg = cfg.replace(levels=tuple(levels), stop_on_success=True)
        schedule = CurriculumSchedule.for_target(
            run_cfg.d, run_cfg.epochs, run_cfg.epochs_per_stage
        )
        label = ",".join(str(level) for level in run_cfg.levels)
        for seed in seeds:
            result = run_curriculum(schedule, run_cfg, seed=seed)
            reached = result.epochs_to_success[schedule.target]
            runs.append(
                {
                    "levels": label,
                    "seed": seed,
                    "epochs_to_success": np.nan if reached is None else reached,
                    "success": reached is not None,
                    "epochs_run": result.summary["epochs"],
                }
            )
    per_run = pd.DataFrame.from_records(
        runs, columns=["levels", "seed", "epochs_to_success", "success", "epochs_run"]
    )
    summary = (
        per_run.groupby("levels", sort=False)
        .agg(
            median_epochs_to_success=("epochs_to_success", "median"),
            n_success=("success", "sum"),
            n_runs=("seed", "count"),
        )
        .reset_index()
    )
    return per_run, summary
