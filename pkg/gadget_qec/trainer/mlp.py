"""Fully connected networks with hand-written reverse-mode gradients (numpy)."""

from __future__ import annotations

__author__ = "gadget-qec contributors"

from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np


class ReLU:
    @staticmethod
    def forward(x: np.ndarray) -> np.ndarray:
        return np.maximum(x, 0.0)

    @staticmethod
    def backward(x: np.ndarray, dout: np.ndarray) -> np.ndarray:
        return dout * (x > 0)


class Tanh:
    @staticmethod
    def forward(x: np.ndarray) -> np.ndarray:
        return np.tanh(x)

    @staticmethod
    def backward(x: np.ndarray, dout: np.ndarray) -> np.ndarray:
        return dout * (1.0 - np.tanh(x) ** 2)


ACTIVATIONS = {"relu": ReLU, "tanh": Tanh}


class MLP:
    """Affine layers with an activation between them and a linear output.

    Parameters
    ----------
    sizes: Sequence[int]
        Layer widths ``[in, hidden..., out]``.
    activation: str, optional
        ``"relu"`` (default) or ``"tanh"``.
    rng: np.random.Generator, optional
        Source of the initial weights, by default a fresh unseeded generator.
    out_scale: float, optional
        Multiplier of the output layer's initial weights, by default 1.0. Policy
        heads use a small value so the initial policy is close to uniform.
    dtype: np.dtype, optional
        Parameter dtype, by default float64.

    """

    def __init__(
        self,
        sizes: Sequence[int],
        activation: str = "relu",
        rng: Optional[np.random.Generator] = None,
        out_scale: float = 1.0,
        dtype=np.float64,
    ):
        if len(sizes) < 2:
            raise ValueError(f"an MLP needs at least input and output sizes: {sizes}")
        if activation not in ACTIVATIONS:
            raise ValueError(
                f"activation must be one of {sorted(ACTIVATIONS)}, got {activation!r}"
            )
        rng = rng if rng is not None else np.random.default_rng()
        self.sizes = tuple(int(s) for s in sizes)
        self.activation = activation
        self._act = ACTIVATIONS[activation]
        self.weights: List[np.ndarray] = []
        self.biases: List[np.ndarray] = []
        n_layers = len(self.sizes) - 1
        for i, (n_in, n_out) in enumerate(zip(self.sizes[:-1], self.sizes[1:])):
            # He initialisation; the output layer is rescaled
            w = rng.standard_normal((n_in, n_out)) * np.sqrt(2.0 / max(n_in, 1))
            if i == n_layers - 1:
                w *= out_scale
            self.weights.append(w.astype(dtype))
            self.biases.append(np.zeros(n_out, dtype=dtype))

    # --------------------------------- parameters ---------------------------------
    def parameters(self) -> List[np.ndarray]:
        """``[W0, b0, W1, b1, ...]``; the arrays are updated in place."""
        params = []
        for w, b in zip(self.weights, self.biases):
            params += [w, b]
        return params

    def state_dict(self, prefix: str = "") -> Dict[str, np.ndarray]:
        state = {}
        for i, (w, b) in enumerate(zip(self.weights, self.biases)):
            state[f"{prefix}W{i}"] = w.copy()
            state[f"{prefix}b{i}"] = b.copy()
        return state

    def load_state_dict(self, state: Dict[str, np.ndarray], prefix: str = "") -> None:
        for i in range(len(self.weights)):
            w, b = state[f"{prefix}W{i}"], state[f"{prefix}b{i}"]
            if w.shape != self.weights[i].shape or b.shape != self.biases[i].shape:
                raise ValueError(f"shape mismatch for layer {i} of {self!r}")
            self.weights[i][...] = w
            self.biases[i][...] = b

    # ------------------------------ forward / backward ----------------------------
    def forward(self, x: np.ndarray) -> Tuple[np.ndarray, list]:
        """Output and the cache needed by :meth:`backward`."""
        h = np.asarray(x, dtype=self.weights[0].dtype)
        cache = []
        for i, (w, b) in enumerate(zip(self.weights, self.biases)):
            z = h @ w + b
            cache.append((h, z))
            h = z if i == len(self.weights) - 1 else self._act.forward(z)
        return h, cache

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.forward(x)[0]

    def backward(self, cache: list, dout: np.ndarray) -> List[np.ndarray]:
        """Gradients of a scalar loss w.r.t. :meth:`parameters`, given ``dL/dout``."""
        grads: List[np.ndarray] = []
        delta = dout
        for i in reversed(range(len(self.weights))):
            h, z = cache[i]
            if i != len(self.weights) - 1:
                delta = self._act.backward(z, delta)
            grads = [h.T @ delta, delta.sum(axis=0)] + grads
            delta = delta @ self.weights[i].T
        return grads

    def __repr__(self) -> str:
        return f"MLP(sizes={list(self.sizes)}, activation={self.activation!r})"
