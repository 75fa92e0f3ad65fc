"""Actor-critic networks and the MAXPPO update.

MAXPPO trains the critic and the advantages against the best partial return of
the remaining trajectory, ``max_j sum_{t'=t..j} gamma^(t'-t) r_t'``, instead of
the full return: the agent is credited for the best circuit prefix it reached.
"""

from __future__ import annotations

__author__ = "gadget-qec contributors"

import warnings
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import NonFiniteLossError
from .mlp import MLP
from .optimizers import AbstractOptimizer, clip_grad_norm


def log_softmax(logits: np.ndarray) -> np.ndarray:
    shifted = logits - logits.max(axis=-1, keepdims=True)
    return shifted - np.log(np.exp(shifted).sum(axis=-1, keepdims=True))


def softmax(logits: np.ndarray) -> np.ndarray:
    return np.exp(log_softmax(logits))


class PolicyValueNets:
    """Actor (observation -> action logits) and critic (observation -> value).

    Parameters
    ----------
    obs_size: int
        Length of the flattened observation.
    n_actions: int
        Number of actions.
    hidden: Sequence[int], optional
        Hidden layer widths of both networks, by default ``(256, 256)``.
    activation: str, optional
        ``"relu"`` (default) or ``"tanh"``.
    rng: np.random.Generator, optional
        Source of the initial weights.

    """

    def __init__(
        self,
        obs_size: int,
        n_actions: int,
        hidden: Sequence[int] = (256, 256),
        activation: str = "relu",
        rng: Optional[np.random.Generator] = None,
    ):
        rng = rng if rng is not None else np.random.default_rng()
        hidden = list(hidden)
        self.obs_size = obs_size
        self.n_actions = n_actions
        self.actor = MLP([obs_size] + hidden + [n_actions], activation, rng, 0.01)
        self.critic = MLP([obs_size] + hidden + [1], activation, rng, 1.0)

    def logits(self, obs: np.ndarray) -> np.ndarray:
        return self.actor(obs)

    def value(self, obs: np.ndarray) -> np.ndarray:
        return self.critic(obs)[:, 0]

    def state_dict(self) -> Dict[str, np.ndarray]:
        return {**self.actor.state_dict("actor."), **self.critic.state_dict("critic.")}

    def load_state_dict(self, state: Dict[str, np.ndarray]) -> None:
        self.actor.load_state_dict(state, "actor.")
        self.critic.load_state_dict(state, "critic.")


def max_return_targets(
    rewards: np.ndarray, dones: np.ndarray, gamma: float = 1.0
) -> np.ndarray:
    """Best discounted partial return of every step within its episode.

    With ``M_t = r_t + gamma * max(0, M_{t+1})`` and ``M_{t+1} = 0`` past the last
    step of an episode, ``M_t`` equals ``max_{j >= t} sum_{t'=t..j} gamma^(t'-t)
    r_t'``. ``dones[t]`` marks the last step of an episode; records of one episode
    must be contiguous and in temporal order.
    """
    rewards = np.asarray(rewards, dtype=np.float64)
    dones = np.asarray(dones, dtype=bool)
    if rewards.shape != dones.shape:
        raise ValueError("rewards and dones must have the same shape")
    targets = np.zeros_like(rewards)
    running = 0.0
    for t in reversed(range(len(rewards))):
        if dones[t]:
            running = 0.0
        running = rewards[t] + gamma * max(0.0, running)
        targets[t] = running
    return targets


@dataclass
class PolicyLoss:
    loss: float
    policy_loss: float
    entropy: float
    approx_kl: float
    clip_frac: float


def policy_loss_and_grad(
    logits: np.ndarray,
    actions: np.ndarray,
    old_log_probs: np.ndarray,
    advantages: np.ndarray,
    clip: float = 0.2,
    entropy_coef: float = 0.01,
) -> Tuple[PolicyLoss, np.ndarray]:
    """Clipped surrogate loss with entropy bonus and its gradient w.r.t. logits.

    ``loss = -mean(min(r A, clip(r, 1 - clip, 1 + clip) A)) - entropy_coef * mean(H)``
    """
    n = len(actions)
    rows = np.arange(n)
    logp = log_softmax(logits)
    p = np.exp(logp)
    logp_a = logp[rows, actions]
    ratio = np.exp(logp_a - old_log_probs)
    surr1 = ratio * advantages
    surr2 = np.clip(ratio, 1.0 - clip, 1.0 + clip) * advantages
    unclipped = surr1 <= surr2
    policy_loss = -float(np.mean(np.minimum(surr1, surr2)))
    entropy = -(p * logp).sum(axis=1)

    # d loss / d logp_a, then through log_softmax: onehot - p
    dlogp_a = np.where(unclipped, -advantages * ratio / n, 0.0)
    dlogits = -p * dlogp_a[:, None]
    dlogits[rows, actions] += dlogp_a
    # entropy bonus: dH/dz_j = -p_j (log p_j + H)
    dlogits += (entropy_coef / n) * p * (logp + entropy[:, None])

    stats = PolicyLoss(
        loss=policy_loss - entropy_coef * float(entropy.mean()),
        policy_loss=policy_loss,
        entropy=float(entropy.mean()),
        approx_kl=float(np.mean(old_log_probs - logp_a)),
        clip_frac=float(np.mean(np.abs(ratio - 1.0) > clip)),
    )
    return stats, dlogits


def value_loss_and_grad(
    values: np.ndarray, targets: np.ndarray, value_coef: float = 0.5
) -> Tuple[float, np.ndarray]:
    """``value_coef * 0.5 * mean((V - R)^2)`` and its gradient w.r.t. ``V``."""
    diff = values - targets
    loss = value_coef * 0.5 * float(np.mean(diff**2))
    return loss, value_coef * diff / len(values)


def ppo_update(
    nets: PolicyValueNets,
    batch,
    targets: np.ndarray,
    actor_opt: AbstractOptimizer,
    critic_opt: AbstractOptimizer,
    clip: float = 0.2,
    epochs: int = 4,
    minibatch: int = 256,
    entropy_coef: float = 0.01,
    value_coef: float = 0.5,
    normalize_advantages: bool = True,
    max_grad_norm: Optional[float] = 0.5,
    rng: Optional[np.random.Generator] = None,
) -> Dict[str, float]:
    """Run ``epochs`` passes of minibatch PPO updates over ``batch``.

    Advantages are ``targets - V`` under the critic that collected the batch. An
    epoch whose loss turns non-finite is aborted with a ``RuntimeWarning`` and
    counted in ``"aborted_epochs"``.

    Returns
    -------
    Dict[str, float]
        Mean loss terms over all minibatch updates.

    """
    rng = rng if rng is not None else np.random.default_rng()
    n = len(batch)
    if len(targets) != n:
        raise ValueError(f"{len(targets)} targets for a batch of {n} records")
    advantages = targets - batch.values
    if normalize_advantages and n > 1:
        advantages = (advantages - advantages.mean()) / (advantages.std() + 1e-8)

    totals = {"policy_loss": 0.0, "value_loss": 0.0, "entropy": 0.0}
    totals.update({"approx_kl": 0.0, "clip_frac": 0.0})
    n_updates, aborted = 0, 0
    obs = batch.observations.astype(np.float64)
    for epoch in range(epochs):
        order = rng.permutation(n)
        try:
            for start in range(0, n, minibatch):
                idx = order[start : start + minibatch]
                logits, actor_cache = nets.actor.forward(obs[idx])
                pl, dlogits = policy_loss_and_grad(
                    logits,
                    batch.actions[idx],
                    batch.log_probs[idx],
                    advantages[idx],
                    clip,
                    entropy_coef,
                )
                values, critic_cache = nets.critic.forward(obs[idx])
                vl, dvalues = value_loss_and_grad(
                    values[:, 0], targets[idx], value_coef
                )
                if not (np.isfinite(pl.loss) and np.isfinite(vl)):
                    raise NonFiniteLossError(
                        f"non-finite loss in epoch {epoch}: "
                        f"policy={pl.loss}, value={vl}"
                    )
                actor_grads = nets.actor.backward(actor_cache, dlogits)
                critic_grads = nets.critic.backward(critic_cache, dvalues[:, None])
                clip_grad_norm(actor_grads, max_grad_norm)
                clip_grad_norm(critic_grads, max_grad_norm)
                actor_opt.step(actor_grads)
                critic_opt.step(critic_grads)

                totals["policy_loss"] += pl.policy_loss
                totals["value_loss"] += vl
                totals["entropy"] += pl.entropy
                totals["approx_kl"] += pl.approx_kl
                totals["clip_frac"] += pl.clip_frac
                n_updates += 1
        except NonFiniteLossError as err:
            warnings.warn(f"{err}; epoch aborted", RuntimeWarning)
            aborted += 1
    stats = {key: value / max(n_updates, 1) for key, value in totals.items()}
    stats["aborted_epochs"] = aborted
    return stats
