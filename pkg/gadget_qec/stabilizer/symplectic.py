"""Binary-symplectic Pauli strings.

A Pauli string on ``n`` qubits is stored as two packed bit vectors (X support and
Z support) and one sign bit. The represented operator is the real matrix

    (-1)^sign * prod_q X_q^{x_q} Z_q^{z_q}

so a position with both bits set is written ``Y`` in labels (it is ``XZ``, i.e. ``Y``
up to a phase that never appears under H / CX conjugation).
"""

from __future__ import annotations

__author__ = "gadget-qec contributors"

from typing import Iterable, List, Optional

import numpy as np

from .gf2 import n_words, pack_bits, parity, popcount, unpack_bits

_LABEL_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_LABEL = {bits: char for char, bits in _LABEL_BITS.items()}


class PauliString:
    """Immutable Pauli string in binary-symplectic, word-packed form.

    Parameters
    ----------
    n: int
        Number of qubits (>= 1).
    x: np.ndarray
        Packed X support, ``n_words(n)`` uint64 words.
    z: np.ndarray
        Packed Z support, ``n_words(n)`` uint64 words.
    sign: int, optional
        0 for +1, 1 for -1. By default 0.

    !!! note
        Use the :meth:`from_label` / :meth:`from_bits` constructors rather than
        passing packed words by hand.

    """

    __slots__ = ("n", "x", "z", "sign")

    def __init__(self, n: int, x: np.ndarray, z: np.ndarray, sign: int = 0):
        if n < 1:
            raise ValueError(f"a Pauli string needs n >= 1 qubits, got {n}")
        x = np.array(x, dtype=np.uint64, copy=True).reshape(-1)
        z = np.array(z, dtype=np.uint64, copy=True).reshape(-1)
        if x.shape != (n_words(n),) or z.shape != (n_words(n),):
            raise ValueError("x and z must both hold n_words(n) packed words")
        x.flags.writeable = False
        z.flags.writeable = False
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "sign", int(sign) & 1)

    def __setattr__(self, name, value):
        raise AttributeError("PauliString is immutable")

    # ------------------------------ constructors ----------------------------------
    @classmethod
    def from_bits(cls, x_bits, z_bits, sign: int = 0) -> PauliString:
        x_bits = np.asarray(x_bits, dtype=np.uint8).reshape(-1)
        z_bits = np.asarray(z_bits, dtype=np.uint8).reshape(-1)
        if len(x_bits) != len(z_bits):
            raise ValueError(
                f"x_bits and z_bits differ in length: {len(x_bits)} != {len(z_bits)}"
            )
        return cls(len(x_bits), pack_bits(x_bits), pack_bits(z_bits), sign)

    @classmethod
    def from_label(cls, label: str) -> PauliString:
        """Parse a letter label such as ``"IIIXXXX"`` or ``"-XZ"``."""
        label = label.strip()
        sign = 0
        if label[:1] in ("+", "-"):
            sign = int(label[0] == "-")
            label = label[1:]
        try:
            bits = [_LABEL_BITS[char] for char in label.upper()]
        except KeyError as err:
            raise ValueError(f"invalid Pauli letter {err} in {label!r}") from None
        if not bits:
            raise ValueError("empty Pauli label")
        x_bits, z_bits = zip(*bits)
        return cls.from_bits(x_bits, z_bits, sign)

    @classmethod
    def from_support(
        cls,
        n: int,
        x: Iterable[int] = (),
        z: Iterable[int] = (),
        sign: int = 0,
    ) -> PauliString:
        """Build from lists of qubit indices carrying X and Z."""
        x_bits = np.zeros(n, dtype=np.uint8)
        z_bits = np.zeros(n, dtype=np.uint8)
        x_bits[list(x)] = 1
        z_bits[list(z)] = 1
        return cls.from_bits(x_bits, z_bits, sign)

    @classmethod
    def identity(cls, n: int) -> PauliString:
        return cls(n, np.zeros(n_words(n), np.uint64), np.zeros(n_words(n), np.uint64))

    # ------------------------------- accessors ------------------------------------
    @property
    def x_bits(self) -> np.ndarray:
        return unpack_bits(self.x, self.n)

    @property
    def z_bits(self) -> np.ndarray:
        return unpack_bits(self.z, self.n)

    @property
    def x_support(self) -> List[int]:
        return np.flatnonzero(self.x_bits).tolist()

    @property
    def z_support(self) -> List[int]:
        return np.flatnonzero(self.z_bits).tolist()

    @property
    def is_x_type(self) -> bool:
        return not self.z.any()

    @property
    def is_z_type(self) -> bool:
        return not self.x.any()

    @property
    def weight(self) -> int:
        return int(popcount(self.x | self.z))

    def permute(self, perm) -> PauliString:
        """Move the content of qubit ``q`` to qubit ``perm[q]``."""
        perm = np.asarray(perm)
        x_bits = np.zeros(self.n, dtype=np.uint8)
        z_bits = np.zeros(self.n, dtype=np.uint8)
        x_bits[perm] = self.x_bits
        z_bits[perm] = self.z_bits
        return PauliString.from_bits(x_bits, z_bits, self.sign)

    # ------------------------------ dunder methods ---------------------------------
    def __str__(self) -> str:
        letters = "".join(
            _BITS_LABEL[(int(x), int(z))] for x, z in zip(self.x_bits, self.z_bits)
        )
        return ("-" if self.sign else "") + letters

    def __repr__(self) -> str:
        return f"PauliString('{self}')"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliString):
            return NotImplemented
        return (
            self.n == other.n
            and self.sign == other.sign
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.z, other.z)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.sign, self.x.tobytes(), self.z.tobytes()))

    def __mul__(self, other: PauliString) -> PauliString:
        return multiply(self, other)


def _check_same_n(p: PauliString, q: PauliString) -> None:
    if p.n != q.n:
        raise ValueError(f"Pauli strings act on different qubit counts: {p.n} != {q.n}")


def weight(p: PauliString) -> int:
    """Number of non-identity positions, ``popcount(x OR z)``."""
    return p.weight


def commutes(p: PauliString, q: PauliString) -> bool:
    """True iff the symplectic inner product of ``p`` and ``q`` vanishes mod 2."""
    _check_same_n(p, q)
    overlap = np.concatenate([p.x & q.z, p.z & q.x])
    return not parity(overlap)


def multiply(p: PauliString, q: PauliString) -> PauliString:
    """The product ``p * q``.

    Supports XOR; reordering ``Z^b X^c`` into ``X^c Z^b`` costs a sign
    ``(-1)^{|p.z AND q.x|}``.
    """
    _check_same_n(p, q)
    sign = p.sign ^ q.sign ^ int(parity(p.z & q.x))
    return PauliString(p.n, p.x ^ q.x, p.z ^ q.z, sign)


def parse_paulis(labels: Iterable[str], n: Optional[int] = None) -> List[PauliString]:
    """Parse many labels, checking they share one qubit count."""
    paulis = [PauliString.from_label(label) for label in labels]
    sizes = {p.n for p in paulis}
    if n is not None:
        sizes.add(n)
    if len(sizes) > 1:
        raise ValueError(f"labels act on different qubit counts: {sorted(sizes)}")
    return paulis
