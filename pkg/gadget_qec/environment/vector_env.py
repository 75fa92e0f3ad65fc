"""Step E independent environments in lock step, resetting finished episodes."""

from __future__ import annotations

__author__ = "gadget-qec contributors"

from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..stabilizer.code_analysis import enumerate_errors
from .code_env import CodeDiscoveryEnv
from .env_config import EnvConfig


class VectorEnv:
    """A batch of :class:`CodeDiscoveryEnv` sharing one action table and error set.

    Finished environments are reset automatically; the info dict of the finishing
    step then carries an ``"episode"`` entry (return, length, success, normalized
    return and the exported circuit) and the returned observation is already the
    one of the new episode.

    Parameters
    ----------
    cfg: EnvConfig
        Configuration of every environment.
    n_envs: int
        Number E of environments.
    workers: int, optional
        Threads used to step the environments, by default 1. Results are always
        returned in environment order.

    """

    def __init__(self, cfg: EnvConfig, n_envs: int, workers: int = 1):
        if n_envs < 1:
            raise ValueError(f"n_envs must be >= 1, got {n_envs}")
        first = CodeDiscoveryEnv(cfg)
        self.envs: List[CodeDiscoveryEnv] = [first] + [
            CodeDiscoveryEnv(cfg, actions=first.actions, error_set=first.error_set)
            for _ in range(n_envs - 1)
        ]
        self.cfg = cfg
        self.workers = max(1, int(workers))
        self._pool: Optional[ThreadPoolExecutor] = None
        if self.workers > 1:
            self._pool = ThreadPoolExecutor(max_workers=self.workers)

    def __len__(self) -> int:
        return len(self.envs)

    @property
    def n_actions(self) -> int:
        return self.envs[0].n_actions

    @property
    def obs_size(self) -> int:
        return self.envs[0].obs_size

    def set_distance(self, d: int) -> None:
        """Retarget every environment to distance ``d`` (new shared error set)."""
        error_set = enumerate_errors(self.cfg.n, d, self.cfg.p)
        for env in self.envs:
            env.set_error_set(error_set)

    def reset(self) -> np.ndarray:
        return np.stack([env.reset() for env in self.envs])

    def _step_one(self, env: CodeDiscoveryEnv, action: int):
        obs, reward, done, info = env.step(action)
        if done:
            info["episode"] = {
                "return": env.state.total_reward,
                "length": env.state.t,
                "success": env.state.success,
                "normalized_return": env.normalized_return(),
                "circuit": env.export_circuit(),
            }
            info["final_observation"] = obs
            obs = env.reset()
        return obs, reward, done, info

    def step(
        self, actions: Sequence[int]
    ) -> Tuple[np.ndarray, np.ndarray, np.ndarray, List[Dict[str, Any]]]:
        if len(actions) != len(self.envs):
            raise ValueError(f"expected {len(self.envs)} actions, got {len(actions)}")
        if self._pool is None:
            results = [self._step_one(e, a) for e, a in zip(self.envs, actions)]
        else:
            results = list(self._pool.map(self._step_one, self.envs, actions))
        obs, rewards, dones, infos = zip(*results)
        return (
            np.stack(obs),
            np.asarray(rewards, dtype=np.float64),
            np.asarray(dones, dtype=bool),
            list(infos),
        )

    def close(self) -> None:
        if self._pool is not None:
            self._pool.shutdown()
            self._pool = None
