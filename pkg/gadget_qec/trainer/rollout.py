"""Rollout collection from a :class:`VectorEnv` under the current policy."""

from __future__ import annotations

__author__ = "gadget-qec contributors"

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from ..environment.vector_env import VectorEnv
from .maxppo import PolicyValueNets, log_softmax


@dataclass
class TrajectoryBatch:
    """Per-step records of E environments over L steps.

    Records are ordered environment by environment, each in temporal order, so that
    every episode occupies a contiguous slice ending at a record with ``done``. A
    rollout cut after L steps counts as the end of its episode.
    """

    observations: np.ndarray  # (N, obs_size) uint8
    actions: np.ndarray  # (N,) int64
    rewards: np.ndarray  # (N,) float64
    log_probs: np.ndarray  # (N,) float64
    values: np.ndarray  # (N,) float64
    dones: np.ndarray  # (N,) bool
    episodes: List[Dict[str, Any]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.actions)

    @property
    def n_episodes(self) -> int:
        return len(self.episodes)

    def success_rate(self) -> float:
        """Fraction of finished episodes that reached a zero Knill-Laflamme sum."""
        if not self.episodes:
            return 0.0
        return float(np.mean([ep["success"] for ep in self.episodes]))

    def mean_normalized_return(self) -> float:
        if not self.episodes:
            return float("nan")
        return float(np.mean([ep["normalized_return"] for ep in self.episodes]))

    def mean_episode_length(self) -> float:
        if not self.episodes:
            return float("nan")
        return float(np.mean([ep["length"] for ep in self.episodes]))

    def successful_circuits(self) -> list:
        return [ep["circuit"] for ep in self.episodes if ep["success"]]


def sample_actions(logits: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """One categorical sample per row of ``logits`` (inverse-CDF)."""
    probs = np.exp(log_softmax(logits))
    cdf = np.cumsum(probs, axis=1)
    u = rng.random(len(logits))[:, None] * cdf[:, -1:]
    return np.minimum((cdf < u).sum(axis=1), logits.shape[1] - 1)


def collect(
    nets: PolicyValueNets,
    venv: VectorEnv,
    rollout_len: int,
    rng: Optional[np.random.Generator] = None,
    greedy: bool = False,
) -> TrajectoryBatch:
    """Reset ``venv`` and step it ``rollout_len`` times under the policy.

    Parameters
    ----------
    nets: PolicyValueNets
        The actor-critic; not modified.
    venv: VectorEnv
        The environments, auto-resetting on episode end.
    rollout_len: int
        Number L of steps per environment.
    rng: np.random.Generator, optional
        Source of the action samples.
    greedy: bool, optional
        Take the argmax action instead of sampling, by default False.

    """
    if rollout_len < 1:
        raise ValueError(f"rollout_len must be >= 1, got {rollout_len}")
    rng = rng if rng is not None else np.random.default_rng()
    n_envs, obs_size = len(venv), venv.obs_size
    obs_buf = np.zeros((rollout_len, n_envs, obs_size), dtype=np.uint8)
    act_buf = np.zeros((rollout_len, n_envs), dtype=np.int64)
    rew_buf = np.zeros((rollout_len, n_envs), dtype=np.float64)
    logp_buf = np.zeros((rollout_len, n_envs), dtype=np.float64)
    val_buf = np.zeros((rollout_len, n_envs), dtype=np.float64)
    done_buf = np.zeros((rollout_len, n_envs), dtype=bool)
    episodes: List[Dict[str, Any]] = []

    obs = venv.reset()
    for step in range(rollout_len):
        x = obs.astype(np.float64)
        logits = nets.logits(x)
        if greedy:
            actions = logits.argmax(axis=1)
        else:
            actions = sample_actions(logits, rng)
        logp = log_softmax(logits)[np.arange(n_envs), actions]
        obs_buf[step] = obs
        act_buf[step] = actions
        logp_buf[step] = logp
        val_buf[step] = nets.value(x)
        obs, rewards, dones, infos = venv.step(actions.tolist())
        rew_buf[step] = rewards
        done_buf[step] = dones
        episodes += [info["episode"] for info in infos if "episode" in info]
    done_buf[-1] = True

    def _flat(buf: np.ndarray) -> np.ndarray:
        # (L, E, ...) -> environment-major (E * L, ...)
        return np.swapaxes(buf, 0, 1).reshape((n_envs * rollout_len,) + buf.shape[2:])

    return TrajectoryBatch(
        observations=_flat(obs_buf),
        actions=_flat(act_buf),
        rewards=_flat(rew_buf),
        log_probs=_flat(logp_buf),
        values=_flat(val_buf),
        dones=_flat(done_buf),
        episodes=episodes,
    )
