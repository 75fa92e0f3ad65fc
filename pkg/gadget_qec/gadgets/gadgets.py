"""Concrete gadgets: CX (level 0), DCX (level 1) and the cross-pattern DCX^(2^q)."""

from __future__ import annotations

__author__ = "gadget-qec contributors"

from typing import List, Sequence

from ..stabilizer.symplectic import PauliString
from ..stabilizer.tableau import PauliTableau
from .cross_pattern import CROSS_PATTERN, CrossPattern, cross_expand, cross_sub_units
from .gadget_interface import CX, AbstractGadget, gadget_size


class CXGadget(AbstractGadget):
    """A single CX; orientation A has ``qubits[0]`` as control."""

    level = 0

    def _expand_a(self) -> List[CX]:
        return [(self.qubits[0], self.qubits[1])]


class DCXGadget(AbstractGadget):
    """The double-CNOT ``CX(a, b)`` followed by ``CX(b, a)``.

    Conjugation maps ``XI -> IX``, ``ZI -> ZZ``, ``IX -> XX`` and ``IZ -> ZI``.
    """

    level = 1

    def _expand_a(self) -> List[CX]:
        a, b = self.qubits
        return [(a, b), (b, a)]


class CrossPatternGadget(AbstractGadget):
    """DCX^(m) for ``m = 2**level >= 4``, four DCX^(m/2) assembled by a cross-pattern.

    Parameters
    ----------
    qubits: Sequence[int]
        The ``2**level`` gadget qubits.
    orientation: str, optional
        ``"A"`` or ``"B"``, by default ``"A"``.
    pattern: CrossPattern, optional
        The placement pattern, by default the calibrated :data:`CROSS_PATTERN`.

    """

    def __init__(
        self,
        qubits: Sequence[int],
        orientation: str = "A",
        pattern: CrossPattern = CROSS_PATTERN,
    ):
        qubits = tuple(qubits)
        m = len(qubits)
        if m < 4 or m & (m - 1):
            raise ValueError(f"a cross-pattern gadget needs 2**q >= 4 qubits, got {m}")
        self.level = m.bit_length() - 1
        self.pattern = pattern
        super().__init__(qubits, orientation)

    def _expand_a(self) -> List[CX]:
        return cross_expand(self.level, self.qubits, self.pattern)

    def sub_units(self) -> List[List[CX]]:
        units = cross_sub_units(self.level, self.qubits, self.pattern)
        if self.orientation == "B":
            units = [[(t, c) for c, t in unit] for unit in units]
        return units


def make_gadget(
    level: int,
    qubits: Sequence[int],
    orientation: str = "A",
    pattern: CrossPattern = CROSS_PATTERN,
) -> AbstractGadget:
    """Gadget of the given level on ``qubits``."""
    if level == 0:
        return CXGadget(qubits, orientation)
    elif level == 1:
        return DCXGadget(qubits, orientation)
    elif level >= 2:
        if len(qubits) != gadget_size(level):
            raise ValueError(
                f"a level-{level} gadget acts on {gadget_size(level)} qubits, "
                f"got {len(qubits)}"
            )
        return CrossPatternGadget(qubits, orientation, pattern)
    raise ValueError(f"gadget level must be >= 0, got {level}")


def ring_gadget(n: int, level: int, anchor: int, orientation: str = "A"):
    """Gadget on the consecutive ring qubits ``anchor, anchor + 1, ... (mod n)``."""
    size = gadget_size(level)
    if size > n:
        raise ValueError(f"a level-{level} gadget needs {size} qubits, ring has {n}")
    if not 0 <= anchor < n:
        raise ValueError(f"anchor {anchor} out of range for n={n}")
    return make_gadget(level, [(anchor + i) % n for i in range(size)], orientation)


# ------------------------------------ static check ---------------------------------
def _layers(units: List[List[CX]]) -> List[List[CX]]:
    """Greedily merge consecutive units on disjoint qubits into one layer."""
    layers: List[List[CX]] = []
    used: set = set()
    for unit in units:
        qubits = {q for gate in unit for q in gate}
        if layers and not qubits & used:
            layers[-1] = layers[-1] + unit
            used |= qubits
        else:
            layers.append(list(unit))
            used = qubits
    return layers


def _conjugation_map(gates: List[CX], qubits: Sequence[int]) -> PauliTableau:
    local = {q: i for i, q in enumerate(qubits)}
    m = len(qubits)
    inputs = [PauliString.from_support(m, x=[i]) for i in range(m)]
    inputs += [PauliString.from_support(m, z=[i]) for i in range(m)]
    return PauliTableau(m, inputs).apply_circuit(
        (local[c], local[t]) for c, t in gates
    )


def commute(first: List[CX], second: List[CX], qubits: Sequence[int]) -> bool:
    """True iff the CX blocks ``first`` and ``second`` commute as Clifford maps."""
    return _conjugation_map(first + second, qubits) == _conjugation_map(
        second + first, qubits
    )


def is_static(gadget: AbstractGadget) -> bool:
    """True iff no two temporally adjacent layers of sub-units commute.

    Sub-units on disjoint qubits that follow each other run in the same moment and
    form one layer; two units inside a layer commute trivially and are not checked.
    """
    layers = _layers(gadget.sub_units())
    return not any(
        commute(first, second, gadget.qubits)
        for first, second in zip(layers, layers[1:])
    )
