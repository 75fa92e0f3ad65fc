"""Encoding circuits: init layer, gadget actions, flattened CX list and file format.

A circuit file is line oriented; ``#`` starts a comment and blank lines are ignored::

    7 1 3
    init
    logical 0
    hadamard
    bell 1,2 3,4 5,6
    actions 1
    1 3 A 3,4
    cx 2
    3 4
    4 3

``actions`` lines hold ``level anchor orientation q0,q1,...`` with ``anchor == q0``.
When actions are listed, the ``cx`` block must equal their flattened expansions; a
circuit without actions (e.g. a normalized one) may hold any CX list.
"""

from __future__ import annotations

__author__ = "gadget-qec contributors"

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from ..exceptions import CircuitParseError
from ..gadgets.gadgets import make_gadget
from ..stabilizer.symplectic import PauliString
from ..stabilizer.tableau import StabilizerTableau

CX = Tuple[int, int]


@dataclass(frozen=True)
class InitLayer:
    """The fixed first layer of every circuit.

    ``logical`` qubits carry no stabilizer row; every Bell pair ``(a, b)`` is prepared
    by ``H(a)`` then ``CX(a, b)`` (rows ``X_a X_b`` and ``Z_a Z_b``); the remaining
    qubits are prepared in ``|+>`` when listed in ``hadamard`` (row ``X_q``) and in
    ``|0>`` otherwise (row ``Z_q``).
    """

    n: int
    logical: Tuple[int, ...] = ()
    hadamard: Tuple[int, ...] = ()
    bell: Tuple[CX, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "logical", tuple(int(q) for q in self.logical))
        object.__setattr__(self, "hadamard", tuple(int(q) for q in self.hadamard))
        object.__setattr__(self, "bell", tuple((int(a), int(b)) for a, b in self.bell))
        used = list(self.logical) + list(self.hadamard)
        used += [q for pair in self.bell for q in pair]
        if len(set(used)) != len(used):
            raise ValueError(f"init layer assigns a qubit twice: {self}")
        if any(not 0 <= q < self.n for q in used):
            raise ValueError(f"init layer qubit out of range for n={self.n}: {self}")

    @classmethod
    def equally_spaced(cls, n: int, k: int) -> InitLayer:
        """Logical qubits at ``floor(i * n / k)``, Bell pairs on the remaining ring.

        The non-logical qubits are taken in ascending (ring) order and consecutive
        entries are paired; an unpaired leftover alternates between H and nothing,
        starting with H.
        """
        if not 1 <= k <= n:
            raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
        logical = tuple(sorted({i * n // k for i in range(k)}))
        free = [q for q in range(n) if q not in logical]
        n_pairs = len(free) // 2
        bell = tuple((free[2 * i], free[2 * i + 1]) for i in range(n_pairs))
        leftovers = free[2 * n_pairs :]
        hadamard = tuple(q for i, q in enumerate(leftovers) if i % 2 == 0)
        return cls(n, logical, hadamard, bell)

    @property
    def k(self) -> int:
        return len(self.logical)

    def leftovers(self) -> List[int]:
        """Qubits that are neither logical nor part of a Bell pair."""
        taken = set(self.logical) | {q for pair in self.bell for q in pair}
        return [q for q in range(self.n) if q not in taken]

    def h_qubits(self) -> List[int]:
        """Every qubit receiving an H in the init layer, ascending."""
        return sorted(set(self.hadamard) | {a for a, _ in self.bell})

    def cx_gates(self) -> List[CX]:
        return list(self.bell)

    def tableau(self) -> StabilizerTableau:
        rows = []
        for a, b in self.bell:
            rows.append(PauliString.from_support(self.n, x=[a, b]))
            rows.append(PauliString.from_support(self.n, z=[a, b]))
        hadamard = set(self.hadamard)
        for q in self.leftovers():
            key = "x" if q in hadamard else "z"
            rows.append(PauliString.from_support(self.n, **{key: [q]}))
        return StabilizerTableau(self.n, rows, k=self.k)


@dataclass(frozen=True)
class ActionRecord:
    """One applied gadget action together with its CX expansion."""

    level: int
    anchor: int
    orientation: str
    qubits: Tuple[int, ...]
    cx: Tuple[CX, ...]


@dataclass
class Circuit:
    """An encoding circuit: init layer followed by the agent's gates.

    Parameters
    ----------
    n, k, d: int
        Code parameters the circuit was built for.
    init: InitLayer
        The init layer.
    actions: List[ActionRecord]
        The gadget actions, in temporal order (may be empty).
    cx: List[CX]
        The flattened action CX list.

    """

    n: int
    k: int
    d: int
    init: InitLayer
    actions: List[ActionRecord] = field(default_factory=list)
    cx: List[CX] = field(default_factory=list)

    def __post_init__(self):
        self.cx = [(int(c), int(t)) for c, t in self.cx]
        if self.init.n != self.n or self.init.k != self.k:
            raise ValueError(
                f"init layer is for n={self.init.n}, k={self.init.k}, "
                f"circuit is [[{self.n},{self.k}]]"
            )

    # ------------------------------ derived views ---------------------------------
    def all_cx(self) -> List[CX]:
        """Init-layer CX gates followed by the action CX gates."""
        return self.init.cx_gates() + self.cx

    def final_tableau(self) -> StabilizerTableau:
        """Stabilizer tableau prepared by the circuit; ``ValueError`` on bad gates."""
        return self.init.tableau().apply_circuit(self.cx)

    def cx_count(self) -> Dict[str, int]:
        n_init = len(self.init.cx_gates())
        return {"init": n_init, "actions": len(self.cx), "total": n_init + len(self.cx)}

    def depth(self) -> int:
        """Circuit depth with every H and CX taking one time step."""
        times = [0] * self.n
        for q in self.init.h_qubits():
            times[q] += 1
        for c, t in self.all_cx():
            times[c] = times[t] = max(times[c], times[t]) + 1
        return max(times, default=0)

    def level_counts(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for action in self.actions:
            counts[action.level] = counts.get(action.level, 0) + 1
        return counts

    # ---------------------------------- text io -----------------------------------
    def to_text(self) -> str:
        def _pairs(pairs: Sequence[CX]) -> str:
            return " ".join(f"{a},{b}" for a, b in pairs)

        lines = [
            f"{self.n} {self.k} {self.d}",
            "init",
            " ".join(["logical"] + [str(q) for q in self.init.logical]),
            " ".join(["hadamard"] + [str(q) for q in self.init.hadamard]),
            " ".join(["bell"] + ([_pairs(self.init.bell)] if self.init.bell else [])),
            f"actions {len(self.actions)}",
        ]
        for a in self.actions:
            qubits = ",".join(map(str, a.qubits))
            lines.append(f"{a.level} {a.anchor} {a.orientation} {qubits}")
        lines.append(f"cx {len(self.cx)}")
        lines += [f"{c} {t}" for c, t in self.cx]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, path: Optional[str] = None) -> Circuit:
        return _CircuitParser(text, path).parse()

    def write(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.write_text(self.to_text())
        return path

    @classmethod
    def read(cls, path: Union[str, Path]) -> Circuit:
        path = Path(path)
        return cls.from_text(path.read_text(), path=str(path))


def read_circuit(path: Union[str, Path]) -> Circuit:
    return Circuit.read(path)


def write_circuit(circuit: Circuit, path: Union[str, Path]) -> Path:
    return circuit.write(path)


class _CircuitParser:
    """Line-by-line parser raising :class:`CircuitParseError` with line numbers."""

    def __init__(self, text: str, path: Optional[str] = None):
        self.path = path
        self._lines: Iterator[Tuple[int, List[str]]] = self._tokenize(text)
        self.line_no: Optional[int] = None

    @staticmethod
    def _tokenize(text: str):
        for line_no, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if line:
                yield line_no, line.split()

    def _error(self, message: str) -> CircuitParseError:
        return CircuitParseError(message, line_no=self.line_no, path=self.path)

    def _next(self, what: str) -> List[str]:
        try:
            self.line_no, tokens = next(self._lines)
        except StopIteration:
            raise CircuitParseError(
                f"unexpected end of file, expected {what}", path=self.path
            ) from None
        return tokens

    def _int(self, token: str, what: str) -> int:
        try:
            return int(token)
        except ValueError:
            raise self._error(f"{what} must be an integer, got {token!r}") from None

    def _pair(self, token: str) -> CX:
        parts = token.split(",")
        if len(parts) != 2:
            raise self._error(f"expected a pair 'a,b', got {token!r}")
        return self._int(parts[0], "qubit"), self._int(parts[1], "qubit")

    def _keyword(self, keyword: str, n_args: Optional[int] = None) -> List[str]:
        tokens = self._next(f"'{keyword}'")
        if tokens[0] != keyword:
            raise self._error(f"expected '{keyword}', got {tokens[0]!r}")
        if n_args is not None and len(tokens) - 1 != n_args:
            raise self._error(f"'{keyword}' takes {n_args} value(s)")
        return tokens[1:]

    def parse(self) -> Circuit:
        header = self._next("the 'n k d' header")
        if len(header) != 3:
            raise self._error("the header must read 'n k d'")
        n, k, d = (self._int(tok, name) for tok, name in zip(header, "nkd"))

        self._keyword("init", 0)
        logical = tuple(self._int(t, "qubit") for t in self._keyword("logical"))
        hadamard = tuple(self._int(t, "qubit") for t in self._keyword("hadamard"))
        bell = tuple(self._pair(t) for t in self._keyword("bell"))
        try:
            init = InitLayer(n, logical, hadamard, bell)
        except ValueError as err:
            raise self._error(str(err)) from None

        (count,) = self._keyword("actions", 1)
        actions = [self._action(n) for _ in range(self._int(count, "action count"))]
        (count,) = self._keyword("cx", 1)
        cx = []
        for _ in range(self._int(count, "cx count")):
            tokens = self._next("a 'control target' line")
            if len(tokens) != 2:
                raise self._error("a cx line must read 'control target'")
            cx.append(self._gate(tokens, n))

        if actions:
            flattened = [gate for a in actions for gate in a.cx]
            if flattened != cx:
                raise self._error("the cx block does not match the listed actions")
        leftover = next(self._lines, None)
        if leftover is not None:
            self.line_no = leftover[0]
            raise self._error("trailing content after the cx block")
        try:
            return Circuit(n, k, d, init, actions, cx)
        except ValueError as err:
            raise self._error(str(err)) from None

    def _gate(self, tokens: List[str], n: int) -> CX:
        c, t = self._int(tokens[0], "control"), self._int(tokens[1], "target")
        if not (0 <= c < n and 0 <= t < n) or c == t:
            raise self._error(f"invalid CX({c}, {t}) for n={n}")
        return c, t

    def _action(self, n: int) -> ActionRecord:
        tokens = self._next("an action line")
        if len(tokens) != 4:
            raise self._error(
                "an action line must read 'level anchor orientation qubits'"
            )
        level = self._int(tokens[0], "level")
        anchor = self._int(tokens[1], "anchor")
        qubits = tuple(self._int(q, "qubit") for q in tokens[3].split(","))
        if not all(0 <= q < n for q in qubits):
            raise self._error(f"action qubits {tokens[3]} out of range for n={n}")
        if anchor != qubits[0]:
            raise self._error(f"anchor {anchor} is not the first action qubit")
        try:
            gadget = make_gadget(level, qubits, tokens[2])
        except ValueError as err:
            raise self._error(str(err)) from None
        return ActionRecord(level, anchor, tokens[2], qubits, tuple(gadget.expand()))
