"""AbstractGadget interface-class, subclassed by the concrete CX / DCX gadgets."""

from __future__ import annotations

__author__ = "gadget-qec contributors"

from abc import ABC, abstractmethod
from typing import List, Sequence, Tuple

CX = Tuple[int, int]
ORIENTATIONS = ("A", "B")


def gadget_size(level: int) -> int:
    """Number of qubits a level-``level`` gadget acts on (a CX counts as two)."""
    if level < 0:
        raise ValueError(f"gadget level must be >= 0, got {level}")
    return max(2, 2**level)


class AbstractGadget(ABC):
    """A fixed CX sub-circuit acting on ``gadget_size(level)`` qubits.

    Subclasses only describe orientation ``"A"``; orientation ``"B"`` is derived here
    by exchanging control and target of every CX of the ``"A"`` expansion.

    Parameters
    ----------
    qubits: Sequence[int]
        The (distinct) circuit qubits the gadget acts on, in gadget order.
    orientation: str, optional
        ``"A"`` or ``"B"``, by default ``"A"``.

    """

    level: int = -1

    def __init__(self, qubits: Sequence[int], orientation: str = "A"):
        self.qubits: Tuple[int, ...] = tuple(int(q) for q in qubits)
        self.orientation = orientation
        self._check_qubits()
        if orientation not in ORIENTATIONS:
            raise ValueError(f"orientation must be 'A' or 'B', got {orientation!r}")

    def _check_qubits(self) -> None:
        size = gadget_size(self.level)
        if len(self.qubits) != size:
            raise ValueError(
                f"a level-{self.level} gadget acts on {size} qubits, "
                f"got {len(self.qubits)}"
            )
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"gadget qubits must be distinct, got {self.qubits}")
        if min(self.qubits) < 0:
            raise ValueError(f"negative qubit index in {self.qubits}")

    @property
    def n_qubits(self) -> int:
        return len(self.qubits)

    @property
    def n_cx(self) -> int:
        return 1 if self.level == 0 else 2 * 4 ** (self.level - 1)

    @abstractmethod
    def _expand_a(self) -> List[CX]:
        """Orientation-A CX list of the gadget on ``self.qubits``."""
        raise NotImplementedError

    def expand(self) -> List[CX]:
        """The ordered list of ``(control, target)`` pairs of this gadget."""
        gates = self._expand_a()
        assert len(gates) == self.n_cx, f"{self!r} expanded to {len(gates)} gates"
        if self.orientation == "B":
            gates = [(t, c) for c, t in gates]
        return gates

    def sub_units(self) -> List[List[CX]]:
        """The expansion split into its temporally ordered building blocks.

        By default every CX is its own unit; composite gadgets return their
        sub-gadget expansions.
        """
        return [[gate] for gate in self.expand()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, AbstractGadget):
            return NotImplemented
        return (self.level, self.qubits, self.orientation) == (
            other.level,
            other.qubits,
            other.orientation,
        )

    def __hash__(self) -> int:
        return hash((self.level, self.qubits, self.orientation))

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(qubits={list(self.qubits)}, "
            f"orientation={self.orientation!r})"
        )
