"""Fixtures and helper functions for testing"""

import numpy as np
import pytest

from gadget_qec.cli import STEANE_CIRCUIT
from gadget_qec.config import TrainConfig
from gadget_qec.environment import EnvConfig, read_circuit
from gadget_qec.stabilizer import golay_tableau, steane_tableau

# hyperparameters
_seed = 42


@pytest.fixture
def rng():
    return np.random.default_rng(_seed)


@pytest.fixture
def steane():
    return steane_tableau()


@pytest.fixture
def golay():
    return golay_tableau()


@pytest.fixture
def steane_circuit():
    return read_circuit(STEANE_CIRCUIT)


@pytest.fixture
def env_cfg_713():
    return EnvConfig(n=7, k=1, d=3)


@pytest.fixture
def env_cfg_gadgets():
    return EnvConfig(n=8, k=1, d=3, levels=("cx", "dcx", "dcx4"))


@pytest.fixture
def tiny_train_cfg(tmp_path):
    """A [[5,1,2]] run small enough for unit tests."""
    return TrainConfig(
        n=5,
        k=1,
        d=2,
        hidden=(16,),
        n_envs=2,
        rollout_len=8,
        minibatch=8,
        ppo_epochs=1,
        epochs=3,
        patience=10,
        out=str(tmp_path / "runs"),
    )
