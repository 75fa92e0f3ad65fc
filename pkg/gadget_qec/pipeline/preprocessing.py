"""Deduplication by canonical tableau and circuit normal form."""

from __future__ import annotations

__author__ = "gadget-qec contributors"

import hashlib
import warnings
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..environment.circuit import Circuit, InitLayer
from ..stabilizer.tableau import StabilizerTableau


def canonical_hash(t: StabilizerTableau) -> str:
    """SHA-256 of the canonical generator matrix (shape included)."""
    matrix = t.canonical_form()
    digest = hashlib.sha256(f"{t.n}:{matrix.shape[0]}:".encode())
    digest.update(np.packbits(matrix, axis=None).tobytes())
    return digest.hexdigest()


@dataclass
class DedupReport:
    """What :func:`dedup` did with every input circuit (by input position)."""

    kept: List[int] = field(default_factory=list)
    discarded: Dict[int, int] = field(default_factory=dict)  # duplicate -> kept one
    rejected: List[Tuple[int, str]] = field(default_factory=list)

    @property
    def n_kept(self) -> int:
        return len(self.kept)

    @property
    def n_discarded(self) -> int:
        return len(self.discarded)

    def __str__(self) -> str:
        return (
            f"kept {self.n_kept}, discarded {self.n_discarded}, "
            f"rejected {len(self.rejected)}"
        )


def dedup(circuits: Sequence[Circuit]) -> Tuple[List[Circuit], DedupReport]:
    """Keep the first circuit of every distinct canonical final tableau.

    Circuits whose gates cannot be applied are rejected with a warning.

    Raises
    ------
    ValueError
        When the circuits do not share ``(n, k)``.

    """
    if len({(c.n, c.k) for c in circuits}) > 1:
        raise ValueError("dedup needs circuits sharing (n, k)")
    report = DedupReport()
    kept: List[Circuit] = []
    first_of: Dict[str, int] = {}
    for idx, circuit in enumerate(circuits):
        try:
            key = canonical_hash(circuit.final_tableau())
        except (ValueError, IndexError) as err:
            warnings.warn(f"circuit {idx} rejected: {err}", UserWarning)
            report.rejected.append((idx, str(err)))
            continue
        if key in first_of:
            report.discarded[idx] = first_of[key]
            continue
        first_of[key] = idx
        report.kept.append(idx)
        kept.append(circuit)
    return kept, report


def normalization_map(c: Circuit) -> List[int]:
    """The relabeling ``perm[old] = new`` that brings ``c`` to normal form.

    Logical qubits come first, then qubits receiving an H in the init layer (both in
    ascending original order), then every other qubit in order of first use along
    the Bell-pair CX gates (in order of their new control label) followed by the
    action CX gates. Idle qubits take the remaining labels in ascending order.
    """
    perm = [-1] * c.n
    next_label = 0

    def _assign(q: int) -> None:
        nonlocal next_label
        if perm[q] < 0:
            perm[q] = next_label
            next_label += 1

    for q in sorted(c.init.logical):
        _assign(q)
    for q in c.init.h_qubits():
        _assign(q)
    for a, b in sorted(c.init.bell, key=lambda pair: perm[pair[0]]):
        _assign(a)
        _assign(b)
    for control, target in c.cx:
        _assign(control)
        _assign(target)
    for q in range(c.n):
        _assign(q)
    return perm


def normalize(c: Circuit) -> Circuit:
    """Relabel ``c`` into normal form; gadget actions are flattened to CX gates."""
    perm = normalization_map(c)
    init = InitLayer(
        c.n,
        logical=tuple(sorted(perm[q] for q in c.init.logical)),
        hadamard=tuple(sorted(perm[q] for q in c.init.hadamard)),
        bell=tuple(sorted((perm[a], perm[b]) for a, b in c.init.bell)),
    )
    cx = [(perm[control], perm[target]) for control, target in c.cx]
    return Circuit(c.n, c.k, c.d, init, [], cx)
