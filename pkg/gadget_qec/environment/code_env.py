"""The code-discovery environment: gadget actions on a stabilizer tableau."""

from __future__ import annotations

__author__ = "gadget-qec contributors"

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..exceptions import EpisodeDoneError
from ..gadgets.actions import ActionTable, enumerate_actions
from ..stabilizer.code_analysis import ErrorSet, enumerate_errors, kl_value
from ..stabilizer.tableau import StabilizerTableau
from .circuit import ActionRecord, Circuit
from .env_config import EnvConfig


@dataclass
class EnvState:
    """Mutable episode state; ``sigma_kl`` always matches the current tableau."""

    tableau: StabilizerTableau
    sigma_kl: float
    sigma_kl0: float
    t: int = 0
    log: List[ActionRecord] = field(default_factory=list)
    total_reward: float = 0.0
    done: bool = False
    success: bool = False


def _mean_weight(t: StabilizerTableau) -> float:
    return float(t.row_weights().mean()) if t.n_rows else 0.0


class CodeDiscoveryEnv:
    """Episodic environment whose actions append gadgets to an encoding circuit.

    The reward of a step is the decrease of the Knill-Laflamme sum over the target
    error set (minus the optional penalties); an episode ends as soon as the sum
    vanishes or after ``cfg.max_steps`` steps.

    Parameters
    ----------
    cfg: EnvConfig
        The environment configuration.
    actions: ActionTable, optional
        A prebuilt action table for ``cfg``; built from ``cfg`` when None.
    error_set: ErrorSet, optional
        A prebuilt error set for ``(cfg.n, cfg.d, cfg.p)``; built when None.

    """

    def __init__(
        self,
        cfg: EnvConfig,
        actions: Optional[ActionTable] = None,
        error_set: Optional[ErrorSet] = None,
    ):
        self.cfg = cfg
        if actions is None:
            actions = enumerate_actions(cfg.n, cfg.levels, cfg.connectivity)
        self.actions = actions
        self.init_layer = cfg.build_init_layer()
        self._initial = self.init_layer.tableau()
        if error_set is None:
            error_set = enumerate_errors(cfg.n, cfg.d, cfg.p)
        self.set_error_set(error_set)
        self.state: Optional[EnvState] = None

    def set_error_set(self, error_set: ErrorSet) -> None:
        """Swap the target error set; takes effect at the next :meth:`reset`."""
        if error_set.n != self.cfg.n:
            raise ValueError(
                f"error set acts on {error_set.n} qubits, environment on {self.cfg.n}"
            )
        self.error_set = error_set
        self._initial_kl = kl_value(self._initial, error_set)

    @property
    def n_actions(self) -> int:
        return len(self.actions)

    @property
    def obs_size(self) -> int:
        return self.cfg.obs_size

    @property
    def d(self) -> int:
        return self.error_set.d

    # ---------------------------------- episode -----------------------------------
    def observation(self) -> np.ndarray:
        assert self.state is not None, "call reset() first"
        return self.state.tableau.observation(self.cfg.observation)

    def reset(self) -> np.ndarray:
        """Start a new episode from the init layer and return its observation."""
        self.state = EnvState(
            tableau=self._initial.copy(),
            sigma_kl=self._initial_kl,
            sigma_kl0=self._initial_kl,
        )
        return self.observation()

    def step(self, action: int) -> Tuple[np.ndarray, float, bool, Dict[str, Any]]:
        """Apply ``action`` and return ``(observation, reward, done, info)``.

        Raises
        ------
        EpisodeDoneError
            When the episode already ended (or was never started).
        IndexError
            When ``action`` is not a valid action index.

        """
        s = self.state
        if s is None or s.done:
            raise EpisodeDoneError("step() called on a finished episode; reset() first")
        entry = self.actions[int(action)]
        mean_weight_before = _mean_weight(s.tableau) if self.cfg.weight_penalty else 0.0

        s.tableau.apply_circuit(entry.cx_gates)
        sigma_prev = s.sigma_kl
        s.sigma_kl = kl_value(s.tableau, self.error_set)
        reward = -(s.sigma_kl - sigma_prev)
        if (
            self.cfg.gadget_penalty
            and entry.level >= 1
            and s.t >= self.cfg.penalty_threshold
        ):
            reward -= self.cfg.gadget_penalty
        if self.cfg.weight_penalty:
            increase = _mean_weight(s.tableau) - mean_weight_before
            reward -= self.cfg.weight_penalty * increase

        s.log.append(
            ActionRecord(
                entry.level,
                entry.anchor,
                entry.orientation,
                entry.qubits,
                entry.cx_gates,
            )
        )
        s.t += 1
        s.total_reward += reward
        s.success = s.sigma_kl == 0.0
        truncated = not s.success and s.t >= self.cfg.max_steps
        s.done = s.success or truncated
        info = {
            "t": s.t,
            "sigma_kl": s.sigma_kl,
            "success": s.success,
            "truncated": truncated,
            "action": entry.name,
        }
        return self.observation(), float(reward), s.done, info

    def normalized_return(self) -> float:
        """Cumulative reward over the initial sum; 1.0 on success up to rounding."""
        assert self.state is not None, "call reset() first"
        if self.state.sigma_kl0 == 0.0:
            return 1.0
        return self.state.total_reward / self.state.sigma_kl0

    def export_circuit(self) -> Circuit:
        """The circuit built so far: init layer, actions and flattened CX list."""
        assert self.state is not None, "call reset() first"
        log = list(self.state.log)
        return Circuit(
            n=self.cfg.n,
            k=self.cfg.k,
            d=self.d,
            init=self.init_layer,
            actions=log,
            cx=[gate for record in log for gate in record.cx],
        )
