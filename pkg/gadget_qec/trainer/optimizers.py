"""First-order optimizers updating numpy parameter arrays in place."""

from __future__ import annotations

__author__ = "gadget-qec contributors"

from abc import ABC, abstractmethod
from typing import Dict, List, Optional, Sequence

import numpy as np


def clip_grad_norm(grads: List[np.ndarray], max_norm: Optional[float]) -> float:
    """Rescale ``grads`` in place to a global L2 norm of at most ``max_norm``.

    Returns the norm before clipping.
    """
    norm = float(np.sqrt(sum(float(np.sum(g * g)) for g in grads)))
    if max_norm is not None and norm > max_norm > 0:
        scale = max_norm / (norm + 1e-12)
        for g in grads:
            g *= scale
    return norm


class AbstractOptimizer(ABC):
    """Updates a fixed list of parameter arrays from matching gradient lists.

    Parameters
    ----------
    params: Sequence[np.ndarray]
        The parameters, updated in place.
    lr: float
        Learning rate.

    """

    def __init__(self, params: Sequence[np.ndarray], lr: float):
        if lr <= 0:
            raise ValueError(f"learning rate must be positive, got {lr}")
        self.params = list(params)
        self.lr = float(lr)

    def _check_grads(self, grads: Sequence[np.ndarray]) -> None:
        assert len(grads) == len(self.params), "one gradient per parameter expected"
        for p, g in zip(self.params, grads):
            assert p.shape == g.shape, f"gradient shape {g.shape} != {p.shape}"

    @abstractmethod
    def _update(self, idx: int, param: np.ndarray, grad: np.ndarray) -> None:
        raise NotImplementedError

    def step(self, grads: Sequence[np.ndarray]) -> None:
        self._check_grads(grads)
        for idx, (param, grad) in enumerate(zip(self.params, grads)):
            self._update(idx, param, grad)

    def state_dict(self) -> Dict[str, np.ndarray]:
        return {}

    def load_state_dict(self, state: Dict[str, np.ndarray]) -> None:
        pass


class SGD(AbstractOptimizer):
    """Plain gradient descent, ``p -= lr * g``."""

    def _update(self, idx: int, param: np.ndarray, grad: np.ndarray) -> None:
        param -= self.lr * grad


class RMSProp(AbstractOptimizer):
    """Momentum-free adaptive step: ``p -= lr * g / (sqrt(v) + eps)``.

    ``v`` is an exponential moving average of ``g ** 2`` with factor ``decay``.
    """

    def __init__(
        self,
        params: Sequence[np.ndarray],
        lr: float = 3e-4,
        decay: float = 0.99,
        eps: float = 1e-8,
    ):
        super().__init__(params, lr)
        if not 0.0 <= decay < 1.0:
            raise ValueError(f"decay must lie in [0, 1), got {decay}")
        self.decay = decay
        self.eps = eps
        self.square_avg = [np.zeros_like(p) for p in self.params]

    def _update(self, idx: int, param: np.ndarray, grad: np.ndarray) -> None:
        v = self.square_avg[idx]
        v *= self.decay
        v += (1.0 - self.decay) * grad * grad
        param -= self.lr * grad / (np.sqrt(v) + self.eps)

    def state_dict(self) -> Dict[str, np.ndarray]:
        return {f"v{i}": v.copy() for i, v in enumerate(self.square_avg)}

    def load_state_dict(self, state: Dict[str, np.ndarray]) -> None:
        for i, v in enumerate(self.square_avg):
            v[...] = state[f"v{i}"]
