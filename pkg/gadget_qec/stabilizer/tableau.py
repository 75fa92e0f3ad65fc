"""Stabilizer tableau evolution under H and CX, canonical form and observation."""

from __future__ import annotations

__author__ = "gadget-qec contributors"

from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .gf2 import BASE, RowBasis, n_words, pack_bits, parity, popcount, rref
from .gf2 import unpack_bits
from .symplectic import PauliString

_ONE = np.uint64(1)


class PauliTableau:
    """A stack of Pauli strings evolved in place under Clifford conjugation.

    Rows are stored word-packed: ``x`` and ``z`` are ``(n_rows, n_words(n))`` uint64
    arrays and ``sign`` is a ``(n_rows,)`` uint8 array. No commutation or
    independence requirement is placed on the rows, which makes this class usable
    for propagating arbitrary Pauli inputs through a gate list (rule tables).

    Parameters
    ----------
    n: int
        Number of qubits.
    rows: Iterable[PauliString]
        The rows, all acting on ``n`` qubits.

    """

    def __init__(self, n: int, rows: Iterable[PauliString] = ()):
        rows = list(rows)
        for row in rows:
            if row.n != n:
                raise ValueError(f"row {row} acts on {row.n} qubits, expected {n}")
        self.n = int(n)
        w = n_words(n)
        self.x = np.array([r.x for r in rows], dtype=np.uint64).reshape(len(rows), w)
        self.z = np.array([r.z for r in rows], dtype=np.uint64).reshape(len(rows), w)
        self.sign = np.array([r.sign for r in rows], dtype=np.uint8)
        self._version = 0

    # --------------------------------- gates --------------------------------------
    def _check_qubit(self, q: int) -> None:
        if not 0 <= q < self.n:
            raise IndexError(f"qubit index {q} out of range for n={self.n}")

    def _touch(self) -> None:
        self._version += 1

    def apply_h(self, q: int) -> PauliTableau:
        """Hadamard on qubit ``q``: swap the X/Z bits, flip the sign on Y."""
        self._check_qubit(q)
        word, offset = divmod(q, BASE)
        mask = np.uint64(1) << np.uint64(offset)
        xq = self.x[:, word] & mask
        zq = self.z[:, word] & mask
        self.sign ^= ((xq & zq) != 0).astype(np.uint8)
        self.x[:, word] ^= xq ^ zq
        self.z[:, word] ^= xq ^ zq
        self._touch()
        return self

    def apply_cx(self, control: int, target: int) -> PauliTableau:
        """CX conjugation: ``x[target] ^= x[control]``, ``z[control] ^= z[target]``.

        The sign is untouched: with rows written as ``X^x Z^z`` products the CX map
        never reorders an X past a Z.
        """
        self._check_qubit(control)
        self._check_qubit(target)
        if control == target:
            raise ValueError(f"CX control and target coincide (qubit {control})")
        wc, oc = divmod(control, BASE)
        wt, ot = divmod(target, BASE)
        oc, ot = np.uint64(oc), np.uint64(ot)
        self.x[:, wt] ^= ((self.x[:, wc] >> oc) & _ONE) << ot
        self.z[:, wc] ^= ((self.z[:, wt] >> ot) & _ONE) << oc
        self._touch()
        return self

    def apply_circuit(self, cx_gates: Iterable[Tuple[int, int]]) -> PauliTableau:
        for control, target in cx_gates:
            self.apply_cx(control, target)
        return self

    # -------------------------------- accessors -----------------------------------
    @property
    def n_rows(self) -> int:
        return len(self.sign)

    def __len__(self) -> int:
        return self.n_rows

    def row(self, i: int) -> PauliString:
        return PauliString(self.n, self.x[i], self.z[i], int(self.sign[i]))

    @property
    def rows(self) -> List[PauliString]:
        return [self.row(i) for i in range(self.n_rows)]

    def x_bits(self) -> np.ndarray:
        return unpack_bits(self.x, self.n).reshape(self.n_rows, self.n)

    def z_bits(self) -> np.ndarray:
        return unpack_bits(self.z, self.n).reshape(self.n_rows, self.n)

    def binary_matrix(self) -> np.ndarray:
        """The ``(rows, 2n)`` 0/1 matrix, X columns first then Z columns."""
        return np.concatenate([self.x_bits(), self.z_bits()], axis=1)

    def row_weights(self) -> np.ndarray:
        return popcount(self.x | self.z)

    def to_labels(self) -> List[str]:
        return [str(r) for r in self.rows]

    def copy(self):
        new = self.__class__.__new__(self.__class__)
        new.__dict__.update(self.__dict__)
        new.x = self.x.copy()
        new.z = self.z.copy()
        new.sign = self.sign.copy()
        return new

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliTableau):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.z, other.z)
            and np.array_equal(self.sign, other.sign)
        )

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(n={self.n}, rows={self.to_labels()})"


class StabilizerTableau(PauliTableau):
    """The ``(n - k) x 2n`` generator matrix of a stabilizer code.

    Parameters
    ----------
    n: int
        Number of physical qubits.
    rows: Iterable[PauliString]
        The generators; there must be at most ``n`` of them.
    k: int, optional
        Number of logical qubits. By default ``n - len(rows)``.

    !!! note
        The commutation / independence invariants are not checked on construction
        (the environment builds tableaux in its hot loop); call
        :meth:`check_invariants` when in doubt.

    """

    def __init__(
        self, n: int, rows: Iterable[PauliString] = (), k: Optional[int] = None
    ):
        super().__init__(n, rows)
        if k is None:
            k = self.n - self.n_rows
        if k < 0 or self.n_rows != self.n - k:
            raise ValueError(
                f"a [[n={n}, k={k}]] tableau needs n - k rows, got {self.n_rows}"
            )
        self.k = int(k)
        self._basis: Optional[RowBasis] = None
        self._basis_version = -1

    @classmethod
    def from_labels(cls, labels: Sequence[str], n: Optional[int] = None, k=None):
        rows = [PauliString.from_label(label) for label in labels]
        if n is None:
            if not rows:
                raise ValueError("n must be given for an empty tableau")
            n = rows[0].n
        return cls(n, rows, k=k)

    # ------------------------------ code structure --------------------------------
    def full_words(self) -> np.ndarray:
        """Rows as packed length-``2n`` vectors (X block then Z block)."""
        return pack_bits(self.binary_matrix())

    def row_basis(self) -> RowBasis:
        """GF(2) elimination basis of the rows, rebuilt only after a gate."""
        if self._basis is None or self._basis_version != self._version:
            self._basis = RowBasis.from_rows(self.full_words(), 2 * self.n)
            self._basis_version = self._version
        return self._basis

    def is_css(self) -> bool:
        """True iff every row is pure X-type or pure Z-type."""
        has_x = self.x.any(axis=1)
        has_z = self.z.any(axis=1)
        return not bool(np.any(has_x & has_z))

    def commutation_matrix(self) -> np.ndarray:
        """``C[i, j] = 1`` iff rows ``i`` and ``j`` anticommute."""
        overlap = (self.x[:, None, :] & self.z[None, :, :]) ^ (
            self.z[:, None, :] & self.x[None, :, :]
        )
        return parity(overlap)

    def check_invariants(self) -> None:
        """Raise ``AssertionError`` when rows anticommute or are dependent."""
        assert not self.commutation_matrix().any(), "tableau rows do not commute"
        assert len(self.row_basis()) == self.n_rows, "tableau rows are dependent"

    def permute_qubits(self, perm: Sequence[int]) -> StabilizerTableau:
        """New tableau with the content of qubit ``q`` moved to ``perm[q]``."""
        return StabilizerTableau(self.n, [r.permute(perm) for r in self.rows], k=self.k)

    # -------------------------------- encodings -----------------------------------
    def canonical_form(self) -> np.ndarray:
        """Unique GF(2) RREF of the generator matrix (X columns first, no signs)."""
        return rref(self.binary_matrix())[0]

    def observation(self, mode: str = "raw") -> np.ndarray:
        """Row-major flattening of the tableau as 0/1 values, length ``2n(n-k)``.

        Parameters
        ----------
        mode: str, optional
            ``"raw"`` (default) flattens the evolved matrix as is, ``"canonical"``
            flattens its RREF.

        """
        if mode == "raw":
            return self.binary_matrix().reshape(-1)
        elif mode == "canonical":
            return self.canonical_form().reshape(-1)
        raise ValueError(f"observation mode must be 'raw' or 'canonical', got {mode!r}")


def apply_h(t: StabilizerTableau, q: int) -> StabilizerTableau:
    """Functional Hadamard: returns an evolved copy of ``t``."""
    return t.copy().apply_h(q)


def apply_cx(t: StabilizerTableau, control: int, target: int) -> StabilizerTableau:
    """Functional CX: returns an evolved copy of ``t``."""
    return t.copy().apply_cx(control, target)


def canonical_form(t: StabilizerTableau) -> np.ndarray:
    return t.canonical_form()


def observation(t: StabilizerTableau, mode: str = "raw") -> np.ndarray:
    return t.observation(mode)


def propagate(
    paulis: Sequence[PauliString], cx_gates: Iterable[Tuple[int, int]]
) -> List[PauliString]:
    """Conjugate every Pauli in ``paulis`` through the CX list ``cx_gates``."""
    if not paulis:
        return []
    return PauliTableau(paulis[0].n, paulis).apply_circuit(cx_gates).rows


### Well-known codes
STEANE_GENERATORS = (
    "IIIXXXX",
    "IXXIIXX",
    "XIXIXIX",
    "IIIZZZZ",
    "IZZIIZZ",
    "ZIZIZIZ",
)


def steane_tableau() -> StabilizerTableau:
    """The [[7,1,3]] Steane code."""
    return StabilizerTableau.from_labels(STEANE_GENERATORS, k=1)


def golay_tableau() -> StabilizerTableau:
    """The [[23,1,7]] quantum Golay code (CSS of the cyclic [23,12,7] Golay code).

    The rows are the 11 cyclic shifts of the dual-code generator, once as X-type and
    once as Z-type.
    """
    n = 23
    # generator polynomial of the [23,12] Golay code: x^11+x^9+x^7+x^6+x^5+x+1
    g = np.zeros(n, dtype=np.uint8)
    g[[0, 1, 5, 6, 7, 9, 11]] = 1
    # the even-weight subcode (the dual) is generated by (1+x) g(x)
    h = g ^ np.roll(g, 1)
    supports = [np.roll(h, s) for s in range(11)]
    zeros = np.zeros(n, dtype=np.uint8)
    rows = [PauliString.from_bits(s, zeros) for s in supports]
    rows += [PauliString.from_bits(zeros, s) for s in supports]
    return StabilizerTableau(n, rows, k=1)


def matrix_to_text(matrix: np.ndarray) -> str:
    """Render a 0/1 matrix as text, one row per line."""
    return "\n".join("".join(str(int(b)) for b in row) for row in np.atleast_2d(matrix))


def overlap_parity(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Parity of ``popcount(a & b)`` per row pair, ``(len(a), len(b))`` result."""
    return parity(a[:, None, :] & b[None, :, :])
