"""Run configuration: a flat ``key = value`` file overridden by command-line flags."""

from __future__ import annotations

__author__ = "gadget-qec contributors"

import dataclasses
import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import orjson

from .environment.env_config import EnvConfig
from .exceptions import ConfigError
from .gadgets.actions import parse_levels


@dataclass(frozen=True)
class TrainConfig:
    """Every environment, MAXPPO, curriculum and I/O setting of a training run."""

    # code and environment
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
    # networks and PPO
    hidden: Tuple[int, ...] = (256, 256)
    activation: str = "relu"
    clip: float = 0.2
    entropy_coef: float = 0.01
    value_coef: float = 0.5
    gamma: float = 1.0
    lr: float = 3e-4
    rms_decay: float = 0.99
    minibatch: int = 256
    ppo_epochs: int = 4
    normalize_advantages: bool = True
    max_grad_norm: float = 0.5
    n_envs: int = 16
    rollout_len: int = 64
    # curriculum
    epochs: int = 2000
    epochs_per_stage: Optional[int] = None
    stage_success_threshold: float = 0.9
    patience: int = 500
    stop_on_success: bool = True
    min_discoveries: int = 1
    # run
    seed: int = 0
    seeds: Tuple[int, ...] = field(default=(0,))
    workers: int = 1
    out: str = "runs"
    verbose: bool = False
    plot: bool = False

    def __post_init__(self):
        try:
            object.__setattr__(self, "levels", parse_levels(self.levels))
        except ValueError as err:
            raise ConfigError("levels", str(err)) from None
        checks = {
            "n": self.n >= 1,
            "k": 1 <= self.k < self.n,
            "d": 2 <= self.d <= self.n,
            "hidden": len(self.hidden) >= 1 and min(self.hidden) >= 1,
            "clip": 0.0 < self.clip < 1.0,
            "gamma": 0.0 < self.gamma <= 1.0,
            "lr": self.lr > 0,
            "minibatch": self.minibatch >= 1,
            "ppo_epochs": self.ppo_epochs >= 1,
            "n_envs": self.n_envs >= 1,
            "rollout_len": self.rollout_len >= 1,
            "epochs": self.epochs >= 1,
            "patience": self.patience >= 1,
            "workers": self.workers >= 1,
            "min_discoveries": self.min_discoveries >= 1,
        }
        for key, ok in checks.items():
            if not ok:
                raise ConfigError(key, f"invalid value {getattr(self, key)!r}")
        try:
            self.env_config()
        except ValueError as err:
            raise ConfigError("env", str(err)) from None

    # ---------------------------------- views ------------------------------------
    def env_config(self, d: Optional[int] = None) -> EnvConfig:
        return EnvConfig(
            n=self.n,
            k=self.k,
            d=self.d if d is None else d,
            levels=self.levels,
            max_steps=self.max_steps,
            p=self.p,
            observation=self.observation,
            connectivity=self.connectivity,
            gadget_penalty=self.gadget_penalty,
            penalty_threshold=self.penalty_threshold,
            weight_penalty=self.weight_penalty,
        )

    def to_dict(self) -> Dict[str, Any]:
        return dataclasses.asdict(self)

    def config_hash(self) -> str:
        """SHA-256 of the key-sorted JSON dump of the resolved config."""
        payload = orjson.dumps(self.to_dict(), option=orjson.OPT_SORT_KEYS)
        return hashlib.sha256(payload).hexdigest()

    def replace(self, **changes) -> TrainConfig:
        return from_dict({**self.to_dict(), **changes})


_FIELDS = {f.name: f for f in dataclasses.fields(TrainConfig)}
_TUPLE_KEYS = {"levels": str, "hidden": int, "seeds": int}


def _coerce(key: str, value: Any) -> Any:
    """Convert a raw (string) value to the type of ``TrainConfig.<key>``."""
    default = _FIELDS[key].default
    if value is None:
        return None
    try:
        if key in _TUPLE_KEYS:
            if isinstance(value, str):
                value = [v.strip() for v in value.split(",") if v.strip()]
            elif not isinstance(value, (list, tuple)):
                value = [value]
            if key == "levels":
                return tuple(value)
            return tuple(int(v) for v in value)
        if isinstance(default, bool):
            if isinstance(value, str):
                lowered = value.strip().lower()
                if lowered not in ("true", "false", "1", "0", "yes", "no"):
                    raise ValueError(f"not a boolean: {value!r}")
                return lowered in ("true", "1", "yes")
            return bool(value)
        if isinstance(value, str) and value.strip().lower() in ("none", ""):
            return None
        if key in ("n", "k", "d", "max_steps", "epochs_per_stage") or isinstance(
            default, int
        ):
            return int(value)
        if isinstance(default, float):
            return float(value)
        return str(value)
    except (TypeError, ValueError) as err:
        raise ConfigError(key, f"cannot parse {value!r}: {err}") from None


def from_dict(values: Dict[str, Any]) -> TrainConfig:
    """Build a :class:`TrainConfig`; unknown keys and bad values raise ConfigError."""
    unknown = sorted(set(values) - set(_FIELDS))
    if unknown:
        raise ConfigError(unknown[0], "unknown configuration key")
    for key in ("n", "k", "d"):
        if values.get(key) is None:
            raise ConfigError(key, "required key is missing")
    return TrainConfig(**{key: _coerce(key, value) for key, value in values.items()})


def read_config_file(path: Union[str, Path]) -> Dict[str, str]:
    """Parse a flat ``key = value`` file (``#`` comments, blank lines ignored)."""
    values: Dict[str, str] = {}
    for line_no, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {line_no}", f"expected 'key = value': {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        values[key] = value
    return values


def load_config(
    path: Optional[Union[str, Path]] = None, overrides: Optional[Dict[str, Any]] = None
) -> TrainConfig:
    """Config file values, then non-None ``overrides`` on top."""
    values: Dict[str, Any] = dict(read_config_file(path)) if path is not None else {}
    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = value
    return from_dict(values)
