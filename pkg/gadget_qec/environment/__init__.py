"""The code-discovery environment, its circuits and the vectorized runner."""

__author__ = "gadget-qec contributors"

from .circuit import ActionRecord, Circuit, InitLayer, read_circuit, write_circuit
from .code_env import CodeDiscoveryEnv, EnvState
from .env_config import EnvConfig
from .vector_env import VectorEnv

__all__ = [
    "InitLayer",
    "ActionRecord",
    "Circuit",
    "read_circuit",
    "write_circuit",
    "EnvConfig",
    "EnvState",
    "CodeDiscoveryEnv",
    "VectorEnv",
]
