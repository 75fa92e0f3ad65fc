"""Configuration of a single code-discovery environment."""

from __future__ import annotations

__author__ = "gadget-qec contributors"

import dataclasses
from dataclasses import dataclass
from typing import Optional, Tuple

from ..gadgets.actions import CONNECTIVITIES, parse_levels
from .circuit import InitLayer

OBSERVATION_MODES = ("raw", "canonical")


@dataclass(frozen=True)
class EnvConfig:
    """Settings of :class:`CodeDiscoveryEnv`.

    Parameters
    ----------
    n: int
        Number of physical qubits.
    k: int
        Number of logical qubits, ``1 <= k < n``; with ``k = n`` there is no
        stabilizer row to observe.
    d: int
        Target distance (>= 2).
    levels: Tuple[int, ...], optional
        Enabled gadget levels, by default CX only. Level names (``"dcx8"``) are
        accepted as well.
    max_steps: int, optional
        Maximum episode length T, by default ``2 * n``.
    p: float, optional
        Error rate of the undetectability weights ``p ** weight``, by default 0.1.
    observation: str, optional
        ``"raw"`` (default) or ``"canonical"`` tableau flattening.
    connectivity: str, optional
        ``"ring"`` (default) or ``"complete"``.
    gadget_penalty: float, optional
        Reward subtracted for each gadget (level >= 1) action taken at step index
        ``>= penalty_threshold``, by default 0 (off).
    penalty_threshold: int, optional
        First step index at which the gadget penalty applies, by default 0.
    weight_penalty: float, optional
        Coefficient on the increase of the mean generator weight per step, by
        default 0 (off).
    init_layer: InitLayer, optional
        Explicit init layer replacing the equally-spaced layout.

    """

    n: int
    k: int
    d: int
    levels: Tuple[int, ...] = (0,)
    max_steps: Optional[int] = None
    p: float = 0.1
    observation: str = "raw"
    connectivity: str = "ring"
    gadget_penalty: float = 0.0
    penalty_threshold: int = 0
    weight_penalty: float = 0.0
    init_layer: Optional[InitLayer] = None

    def __post_init__(self):
        object.__setattr__(self, "levels", parse_levels(self.levels))
        if self.max_steps is None:
            object.__setattr__(self, "max_steps", 2 * self.n)
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.k >= self.n:
            raise ValueError(f"k must be < n, got n={self.n}, k={self.k}")
        if not 2 <= self.d <= self.n:
            raise ValueError(f"d must lie in 2..n, got d={self.d} for n={self.n}")
        if self.max_steps < 1:
            raise ValueError(f"max_steps must be >= 1, got {self.max_steps}")
        if not 0.0 < self.p < 1.0:
            raise ValueError(f"p must lie in (0, 1), got {self.p}")
        if self.observation not in OBSERVATION_MODES:
            raise ValueError(
                f"observation must be one of {OBSERVATION_MODES}, "
                f"got {self.observation!r}"
            )
        if self.connectivity not in CONNECTIVITIES:
            raise ValueError(
                f"connectivity must be one of {CONNECTIVITIES}, "
                f"got {self.connectivity!r}"
            )
        if self.init_layer is not None and (
            self.init_layer.n != self.n or self.init_layer.k != self.k
        ):
            raise ValueError("init_layer does not match (n, k)")

    @property
    def T(self) -> int:
        return self.max_steps

    @property
    def obs_size(self) -> int:
        return 2 * self.n * (self.n - self.k)

    def build_init_layer(self) -> InitLayer:
        if self.init_layer is not None:
            return self.init_layer
        return InitLayer.equally_spaced(self.n, self.k)

    def with_distance(self, d: int) -> EnvConfig:
        """Copy of this config targeting distance ``d``."""
        return dataclasses.replace(self, d=d)
