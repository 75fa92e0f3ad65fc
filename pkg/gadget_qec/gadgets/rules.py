"""Conjugation rule tables of the gadget family.

A rule table lists, for a gadget on ``m`` qubits, the image of every weight-1 X and
Z Pauli under conjugation by the gadget's CX expansion.
"""

from __future__ import annotations

__author__ = "gadget-qec contributors"

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Tuple

import numpy as np
import pandas as pd

from ..stabilizer.symplectic import PauliString
from ..stabilizer.tableau import overlap_parity, propagate
from .gadget_interface import gadget_size
from .gadgets import make_gadget

ARROW = "→"
MAX_LEVEL = 5


@dataclass(frozen=True)
class RuleTable:
    """Images of ``X_q`` (``x_rules[q]``) and ``Z_q`` (``z_rules[q]``)."""

    level: int
    orientation: str
    x_rules: Tuple[PauliString, ...]
    z_rules: Tuple[PauliString, ...]

    @property
    def m(self) -> int:
        return len(self.x_rules)

    def output(self, pauli_type: str, q: int) -> PauliString:
        if pauli_type == "X":
            return self.x_rules[q]
        elif pauli_type == "Z":
            return self.z_rules[q]
        raise ValueError(f"pauli_type must be 'X' or 'Z', got {pauli_type!r}")

    def max_weight(self) -> int:
        return max(p.weight for p in self.x_rules + self.z_rules)

    def _inputs(self, pauli_type: str) -> List[PauliString]:
        key = "x" if pauli_type == "X" else "z"
        return [PauliString.from_support(self.m, **{key: [q]}) for q in range(self.m)]

    def arrows(self) -> List[str]:
        """Rules rendered as ``"XIII → XIXI"``, all X inputs first."""
        lines = []
        for pauli_type, outputs in (("X", self.x_rules), ("Z", self.z_rules)):
            for p_in, p_out in zip(self._inputs(pauli_type), outputs):
                lines.append(f"{p_in} {ARROW} {p_out}")
        return lines

    def to_frame(self) -> pd.DataFrame:
        records = []
        for pauli_type, outputs in (("X", self.x_rules), ("Z", self.z_rules)):
            for q, (p_in, p_out) in enumerate(zip(self._inputs(pauli_type), outputs)):
                records.append(
                    {
                        "level": self.level,
                        "orientation": self.orientation,
                        "pauli_type": pauli_type,
                        "qubit": q,
                        "input": str(p_in),
                        "output": str(p_out),
                        "weight": p_out.weight,
                    }
                )
        return pd.DataFrame.from_records(records)

    def is_symplectic(self) -> bool:
        """True iff the images keep the commutation relations of the inputs.

        ``X_i`` and ``Z_j`` anticommute exactly when ``i == j``; all other input
        pairs commute.
        """
        outputs = self.x_rules + self.z_rules
        x = np.stack([p.x for p in outputs])
        z = np.stack([p.z for p in outputs])
        commutation = overlap_parity(x, z) ^ overlap_parity(z, x)
        expected = np.zeros((2 * self.m, 2 * self.m), dtype=np.uint8)
        expected[: self.m, self.m :] = np.eye(self.m, dtype=np.uint8)
        expected[self.m :, : self.m] = np.eye(self.m, dtype=np.uint8)
        return bool(np.array_equal(commutation, expected))


def _swap_xz(p: PauliString, reverse: bool) -> PauliString:
    x_bits, z_bits = p.z_bits, p.x_bits
    if reverse:
        x_bits, z_bits = x_bits[::-1], z_bits[::-1]
    return PauliString.from_bits(x_bits, z_bits, p.sign)


def exchange(table: RuleTable, reverse: bool = True) -> RuleTable:
    """Apply the control/target exchange symmetry to a rule table.

    With ``reverse=True`` the qubit order is reversed and X is swapped with Z; a
    table that is its own exchange image has a Z table determined by its X table.
    With ``reverse=False`` only the letters are swapped, which turns the table of
    orientation A into the table of orientation B.
    """
    m = table.m
    if reverse:
        x_rules = tuple(_swap_xz(table.z_rules[m - 1 - q], True) for q in range(m))
        z_rules = tuple(_swap_xz(table.x_rules[m - 1 - q], True) for q in range(m))
    else:
        x_rules = tuple(_swap_xz(p, False) for p in table.z_rules)
        z_rules = tuple(_swap_xz(p, False) for p in table.x_rules)
    orientation = table.orientation
    if not reverse:
        orientation = "B" if orientation == "A" else "A"
    return RuleTable(table.level, orientation, x_rules, z_rules)


@lru_cache(maxsize=None)
def rule_table(level: int, orientation: str = "A") -> RuleTable:
    """Rule table of the level-``level`` gadget on qubits ``0 .. m-1``."""
    if not 0 <= level <= MAX_LEVEL:
        raise ValueError(f"level must be within 0..{MAX_LEVEL}, got {level}")
    m = gadget_size(level)
    gates = make_gadget(level, range(m), orientation).expand()
    x_in = [PauliString.from_support(m, x=[q]) for q in range(m)]
    z_in = [PauliString.from_support(m, z=[q]) for q in range(m)]
    return RuleTable(
        level=level,
        orientation=orientation,
        x_rules=tuple(propagate(x_in, gates)),
        z_rules=tuple(propagate(z_in, gates)),
    )


def max_propagated_weight(level: int) -> int:
    """Largest weight a weight-1 Pauli reaches through a level-``level`` gadget."""
    if level < 1:
        raise ValueError(f"max_propagated_weight needs level >= 1, got {level}")
    return rule_table(level).max_weight()


def weight_curve(levels: Iterable[int] = range(1, MAX_LEVEL + 1)) -> pd.DataFrame:
    """``(m, max_weight)`` for the given gadget levels."""
    levels = list(levels)
    return pd.DataFrame(
        {
            "m": [gadget_size(q) for q in levels],
            "max_weight": [max_propagated_weight(q) for q in levels],
        }
    )
