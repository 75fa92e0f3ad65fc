"""Brute-force oracles and builders shared by the tests."""

from __future__ import annotations

from functools import reduce
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from gadget_qec.environment.circuit import Circuit, InitLayer
from gadget_qec.stabilizer.symplectic import PauliString
from gadget_qec.stabilizer.tableau import StabilizerTableau

_I = np.eye(2)
_X = np.array([[0.0, 1.0], [1.0, 0.0]])
_Z = np.array([[1.0, 0.0], [0.0, -1.0]])


# ------------------------------- dense Pauli algebra --------------------------------
def dense_pauli(p: PauliString) -> np.ndarray:
    """Real ``2^n x 2^n`` matrix ``(-1)^s prod_q X_q^x Z_q^z``, qubit 0 leftmost."""
    factors = []
    for x, z in zip(p.x_bits, p.z_bits):
        m = _I
        if x:
            m = m @ _X
        if z:
            m = m @ _Z
        factors.append(m)
    return (-1.0) ** p.sign * reduce(np.kron, factors)


def code_projector(t: StabilizerTableau) -> np.ndarray:
    """``prod_i (I + g_i) / 2`` for a CSS tableau."""
    dim = 2**t.n
    proj = np.eye(dim)
    for row in t.rows:
        proj = proj @ (np.eye(dim) + dense_pauli(row)) / 2
    return proj


def projector_detectable(t: StabilizerTableau, e: PauliString) -> bool:
    """Knill-Laflamme oracle: ``P E P`` is a multiple of ``P``."""
    proj = code_projector(t)
    m = proj @ dense_pauli(e) @ proj
    c = np.trace(m) / np.trace(proj)
    return bool(np.allclose(m, c * proj, atol=1e-9))


# ----------------------------------- builders ---------------------------------------
def random_cx(n: int, n_gates: int, rng: np.random.Generator) -> List[Tuple[int, int]]:
    gates = []
    for _ in range(n_gates):
        c, t = rng.choice(n, size=2, replace=False)
        gates.append((int(c), int(t)))
    return gates


def random_circuit(
    n: int,
    k: int,
    n_gates: int,
    rng: np.random.Generator,
    d: int = 2,
    init: Optional[InitLayer] = None,
) -> Circuit:
    init = init if init is not None else InitLayer.equally_spaced(n, k)
    return Circuit(n, k, d, init, [], random_cx(n, n_gates, rng))


def random_css_tableau(n: int, rng: np.random.Generator) -> StabilizerTableau:
    k = int(rng.integers(1, n))
    return random_circuit(n, k, int(rng.integers(0, 3 * n)), rng).final_tableau()


def permuted_circuit(c: Circuit, perm: Sequence[int]) -> Circuit:
    """``c`` with qubit ``q`` relabelled ``perm[q]``."""
    init = InitLayer(
        c.n,
        logical=tuple(perm[q] for q in c.init.logical),
        hadamard=tuple(perm[q] for q in c.init.hadamard),
        bell=tuple((perm[a], perm[b]) for a, b in c.init.bell),
    )
    return Circuit(c.n, c.k, c.d, init, [], [(perm[a], perm[b]) for a, b in c.cx])


# ------------------------------------ oracles ---------------------------------------
def suffix_max_oracle(
    rewards: np.ndarray, dones: np.ndarray, gamma: float
) -> np.ndarray:
    """``max_{j >= t} sum_{t'=t..j} gamma^(t'-t) r_t'`` within every episode."""
    out = np.zeros(len(rewards))
    ends = np.flatnonzero(dones)
    for t in range(len(rewards)):
        end = ends[ends >= t][0]
        partial = [
            sum(gamma ** (i - t) * rewards[i] for i in range(t, j + 1))
            for j in range(t, end + 1)
        ]
        out[t] = max(partial)
    return out


def numerical_grad(
    f: Callable[[], float], param: np.ndarray, idx: tuple, eps: float = 1e-6
) -> float:
    """Central finite difference of ``f`` w.r.t. ``param[idx]`` (restored after)."""
    orig = param[idx]
    param[idx] = orig + eps
    plus = f()
    param[idx] = orig - eps
    minus = f()
    param[idx] = orig
    return (plus - minus) / (2 * eps)


def dense_cx(n: int, control: int, target: int) -> np.ndarray:
    """Permutation matrix of ``CX(control, target)`` (qubit 0 = most significant)."""
    dim = 2**n
    u = np.zeros((dim, dim))
    for b in range(dim):
        bit_c = (b >> (n - 1 - control)) & 1
        u[b ^ (bit_c << (n - 1 - target)), b] = 1.0
    return u
