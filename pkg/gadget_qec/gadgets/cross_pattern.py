"""The cross-pattern that assembles a DCX^(2m) gadget from four DCX^(m) gadgets.

A level-``q`` gadget (``q >= 2``) on the qubit list ``Q`` splits ``Q`` into four
consecutive blocks of ``len(Q) / 4`` qubits. Each of the four placements of the
pattern puts a level ``q - 1`` sub-gadget on ``blocks[first] + blocks[second]``
with the given orientation, in temporal order.

The wiring is pinned by the DCX^(4) and DCX^(8) conjugation tables below, which
over-determine it: :func:`derive_cross_pattern` searches every ordered sequence of
four DCX gates on four qubits, keeps those reproducing the DCX^(4) table and then
picks the sub-gadget orientations of the block lift against the DCX^(8) table.
The result is frozen as :data:`CROSS_PATTERN`.
"""

from __future__ import annotations

__author__ = "gadget-qec contributors"

import itertools
from typing import List, NamedTuple, Sequence, Tuple

from ..exceptions import CrossPatternError

CX = Tuple[int, int]
Rules = Tuple[Tuple[int, ...], ...]


class Placement(NamedTuple):
    first: int
    second: int
    orientation: str


class CrossPattern(NamedTuple):
    """Placements used at level 2 (``base``) and at every level >= 3 (``lift``)."""

    base: Tuple[Placement, ...]
    lift: Tuple[Placement, ...]

    def placements(self, level: int) -> Tuple[Placement, ...]:
        if level < 2:
            raise ValueError(f"the cross-pattern applies to levels >= 2, got {level}")
        return self.base if level == 2 else self.lift


# output support of every weight-1 X input (qubit 0 = leftmost letter)
DCX4_X_RULES: Rules = ((0, 2), (1, 2, 3), (0, 1, 2, 3), (1, 2))
DCX4_Z_RULES: Rules = ((1, 2), (0, 1, 2, 3), (0, 1, 2), (1, 3))
DCX8_X_RULES: Rules = (
    (0, 2, 4),
    (1, 2, 3, 5),
    (0, 1, 4, 6),
    (1, 4, 5, 7),
    (0, 2, 3, 4, 7),
    (1, 3, 5, 6),
    (2, 5, 6, 7),
    (3, 4, 6),
)


def mirror_rules(x_rules: Rules) -> Rules:
    """Z table implied by an X table under qubit reversal and X <-> Z exchange."""
    m = len(x_rules)
    z_rules = [()] * m
    for q, support in enumerate(x_rules):
        z_rules[m - 1 - q] = tuple(sorted(m - 1 - j for j in support))
    return tuple(z_rules)


DCX8_Z_RULES: Rules = mirror_rules(DCX8_X_RULES)

CROSS_PATTERN = CrossPattern(
    base=(
        Placement(1, 2, "A"),
        Placement(0, 1, "B"),
        Placement(2, 3, "B"),
        Placement(1, 2, "A"),
    ),
    lift=(
        Placement(1, 2, "A"),
        Placement(0, 1, "A"),
        Placement(2, 3, "A"),
        Placement(1, 2, "A"),
    ),
)


# ------------------------------------ expansion ------------------------------------
def _swap(gates: List[CX]) -> List[CX]:
    return [(t, c) for c, t in gates]


def cross_expand(
    level: int,
    qubits: Sequence[int],
    pattern: CrossPattern = CROSS_PATTERN,
    orientation: str = "A",
) -> List[CX]:
    """Recursive CX expansion of a level-``level`` gadget on ``qubits``."""
    qubits = list(qubits)
    if level == 0:
        gates = [(qubits[0], qubits[1])]
    elif level == 1:
        gates = [(qubits[0], qubits[1]), (qubits[1], qubits[0])]
    else:
        gates = []
        for sub_qubits, sub_orientation in _sub_placements(level, qubits, pattern):
            gates += cross_expand(level - 1, sub_qubits, pattern, sub_orientation)
    return _swap(gates) if orientation == "B" else gates


def _sub_placements(level: int, qubits: List[int], pattern: CrossPattern):
    size = len(qubits) // 4
    blocks = [qubits[i * size : (i + 1) * size] for i in range(4)]
    for placement in pattern.placements(level):
        yield blocks[placement.first] + blocks[placement.second], placement.orientation


def cross_sub_units(
    level: int, qubits: Sequence[int], pattern: CrossPattern = CROSS_PATTERN
) -> List[List[CX]]:
    """The four orientation-A sub-gadget expansions of a level >= 2 gadget."""
    return [
        cross_expand(level - 1, sub_qubits, pattern, sub_orientation)
        for sub_qubits, sub_orientation in _sub_placements(level, list(qubits), pattern)
    ]


# ------------------------------------ calibration ----------------------------------
def _propagate_x(gates: Sequence[CX], mask: int) -> int:
    for c, t in gates:
        if (mask >> c) & 1:
            mask ^= 1 << t
    return mask


def _propagate_z(gates: Sequence[CX], mask: int) -> int:
    for c, t in gates:
        if (mask >> t) & 1:
            mask ^= 1 << c
    return mask


def _to_mask(support: Sequence[int]) -> int:
    return sum(1 << j for j in support)


def reproduces(gates: Sequence[CX], x_rules: Rules, z_rules: Rules) -> bool:
    """True iff conjugation through ``gates`` maps every weight-1 input as listed."""
    for q, (x_out, z_out) in enumerate(zip(x_rules, z_rules)):
        if _propagate_x(gates, 1 << q) != _to_mask(x_out):
            return False
        if _propagate_z(gates, 1 << q) != _to_mask(z_out):
            return False
    return True


def _dcx(a: int, b: int) -> List[CX]:
    return [(a, b), (b, a)]


def dcx4_candidates() -> List[Tuple[Placement, ...]]:
    """Every ordered four-DCX sequence on 4 qubits that reproduces the DCX^(4) table.

    A DCX started on ``(a, b)`` is the orientation-A DCX of the sorted pair when
    ``a < b`` and orientation B otherwise.
    """
    pairs = [(a, b) for a in range(4) for b in range(4) if a != b]
    found = []
    for sequence in itertools.product(pairs, repeat=4):
        gates = [gate for a, b in sequence for gate in _dcx(a, b)]
        if reproduces(gates, DCX4_X_RULES, DCX4_Z_RULES):
            found.append(
                tuple(
                    Placement(min(a, b), max(a, b), "A" if a < b else "B")
                    for a, b in sequence
                )
            )
    return found


def derive_cross_pattern() -> CrossPattern:
    """Search the cross-pattern that reproduces both the DCX^(4) and DCX^(8) tables.

    The block lift keeps the offsets and temporal order of the four-DCX base and
    tries every combination of sub-gadget orientations. Among all valid patterns
    the lexicographically smallest ``(base, lift)`` is returned.

    Raises
    ------
    CrossPatternError
        When no candidate satisfies both tables.

    """
    valid = []
    for base in dcx4_candidates():
        for orientations in itertools.product("AB", repeat=4):
            lift = tuple(
                Placement(p.first, p.second, o) for p, o in zip(base, orientations)
            )
            pattern = CrossPattern(base=base, lift=lift)
            gates = cross_expand(3, range(8), pattern)
            if reproduces(gates, DCX8_X_RULES, DCX8_Z_RULES):
                valid.append(pattern)
    if not valid:
        raise CrossPatternError(
            "no four-DCX sequence reproduces both the DCX^(4) and DCX^(8) tables"
        )
    return min(valid)
