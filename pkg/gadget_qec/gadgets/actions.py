"""Enumeration of the gadget actions available on a connectivity graph."""

from __future__ import annotations

__author__ = "gadget-qec contributors"

import warnings
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

import pandas as pd

from .gadget_interface import CX, ORIENTATIONS, gadget_size
from .gadgets import make_gadget, ring_gadget

LEVEL_NAMES = {"cx": 0, "dcx": 1, "dcx4": 2, "dcx8": 3, "dcx16": 4, "dcx32": 5}
CONNECTIVITIES = ("ring", "complete")


def level_name(level: int) -> str:
    for name, value in LEVEL_NAMES.items():
        if value == level:
            return name
    raise ValueError(f"unknown gadget level {level}")


def parse_levels(levels: Union[str, Iterable[Union[str, int]]]) -> Tuple[int, ...]:
    """Parse ``"cx,dcx8"`` / ``["cx", 3]`` / ``(0, 1)`` into sorted level numbers."""
    if isinstance(levels, str):
        levels = [part for part in levels.split(",") if part.strip()]
    parsed = set()
    for level in levels:
        if isinstance(level, str):
            key = level.strip().lower()
            if key.isdigit():
                parsed.add(int(key))
            elif key in LEVEL_NAMES:
                parsed.add(LEVEL_NAMES[key])
            else:
                raise ValueError(
                    f"unknown gadget level {level!r}, expected one of "
                    f"{sorted(LEVEL_NAMES)} or an integer"
                )
        else:
            parsed.add(int(level))
    if not parsed:
        raise ValueError("at least one gadget level must be enabled")
    if min(parsed) < 0 or max(parsed) > max(LEVEL_NAMES.values()):
        raise ValueError(f"gadget levels must lie in 0..5, got {sorted(parsed)}")
    return tuple(sorted(parsed))


@dataclass(frozen=True)
class Action:
    """One entry of the action table."""

    index: int
    level: int
    anchor: int
    orientation: str
    qubits: Tuple[int, ...]
    cx_gates: Tuple[CX, ...]

    @property
    def name(self) -> str:
        return f"{level_name(self.level)}@{self.anchor}{self.orientation}"


class ActionTable:
    """Flat action index -> gadget instance.

    Parameters
    ----------
    n: int
        Number of qubits.
    actions: Sequence[Action]
        The actions, ``actions[i].index == i``.
    levels: Tuple[int, ...]
        The gadget levels that made it into the table.
    connectivity: str
        The connectivity the table was built for.

    """

    def __init__(
        self,
        n: int,
        actions: Sequence[Action],
        levels: Tuple[int, ...],
        connectivity: str = "ring",
    ):
        self.n = n
        self.actions: Tuple[Action, ...] = tuple(actions)
        self.levels = levels
        self.connectivity = connectivity
        assert all(a.index == i for i, a in enumerate(self.actions))

    def __len__(self) -> int:
        return len(self.actions)

    def __getitem__(self, index: int) -> Action:
        if not 0 <= index < len(self.actions):
            raise IndexError(
                f"action {index} out of range, the table holds {len(self.actions)}"
            )
        return self.actions[index]

    def __iter__(self):
        return iter(self.actions)

    def cx_gates(self, index: int) -> Tuple[CX, ...]:
        return self[index].cx_gates

    def find(self, level: int, qubits: Sequence[int], orientation: str = "A") -> int:
        """Index of the action with the given level, qubits and orientation."""
        key = (level, tuple(qubits), orientation)
        for action in self.actions:
            if (action.level, action.qubits, action.orientation) == key:
                return action.index
        raise KeyError(f"no action {key} in the table")

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "index": [a.index for a in self.actions],
                "name": [a.name for a in self.actions],
                "level": [a.level for a in self.actions],
                "anchor": [a.anchor for a in self.actions],
                "orientation": [a.orientation for a in self.actions],
                "qubits": [",".join(map(str, a.qubits)) for a in self.actions],
                "n_cx": [len(a.cx_gates) for a in self.actions],
            }
        )

    def __repr__(self) -> str:
        return (
            f"ActionTable(n={self.n}, levels={self.levels}, "
            f"connectivity={self.connectivity!r}, n_actions={len(self)})"
        )


def enumerate_actions(
    n: int,
    levels: Iterable[Union[str, int]] = (0,),
    connectivity: str = "ring",
) -> ActionTable:
    """Build the action table of ``n`` qubits for the enabled gadget levels.

    On the ``"ring"`` every level contributes ``2n`` actions, one per ring anchor and
    orientation (on two qubits the CX level has only its two distinct gates). With
    ``"complete"`` connectivity level 0 offers every ordered CX pair instead, while
    gadgets keep their ring windows.

    A gadget level whose size is not smaller than ``n`` is excluded with a warning
    (a single CX only needs ``n >= 2``).

    Raises
    ------
    ValueError
        When no level survives or the connectivity is unknown.

    """
    if connectivity not in CONNECTIVITIES:
        raise ValueError(
            f"connectivity must be one of {CONNECTIVITIES}, got {connectivity!r}"
        )
    kept = []
    for level in parse_levels(levels):
        if gadget_size(level) > n or (level > 0 and gadget_size(level) == n):
            warnings.warn(
                f"gadget level {level_name(level)} needs {gadget_size(level)} qubits "
                f"and is excluded on n={n}",
                UserWarning,
            )
            continue
        kept.append(level)
    if not kept:
        raise ValueError(f"no enabled gadget level fits on n={n} qubits")

    actions: List[Action] = []

    def _add(level: int, anchor: int, orientation: str, gadget) -> None:
        actions.append(
            Action(
                index=len(actions),
                level=level,
                anchor=anchor,
                orientation=orientation,
                qubits=gadget.qubits,
                cx_gates=tuple(gadget.expand()),
            )
        )

    for level in kept:
        if level == 0 and connectivity == "complete":
            for control in range(n):
                for target in range(n):
                    if control != target:
                        _add(0, control, "A", make_gadget(0, (control, target)))
            continue
        seen = set()
        for anchor in range(n):
            for orientation in ORIENTATIONS:
                gadget = ring_gadget(n, level, anchor, orientation)
                # on two qubits both ring edges join the same pair
                gates = tuple(gadget.expand())
                if gates in seen:
                    continue
                seen.add(gates)
                _add(level, anchor, orientation, gadget)
    return ActionTable(n, actions, tuple(kept), connectivity)
