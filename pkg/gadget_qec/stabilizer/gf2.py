"""Word-packed GF(2) helpers.

Bit vectors are stored as little-endian bit order inside ``uint64`` words: bit ``i``
lives in word ``i // 64`` at position ``i % 64``. All hot-loop operations (weight,
overlap parity, XOR) act on whole words.
"""

from __future__ import annotations

__author__ = "gadget-qec contributors"

from typing import List, Tuple

import numpy as np

BASE = 64
_ONE = np.uint64(1)
_FOLD_SHIFTS = [np.uint64(s) for s in (32, 16, 8, 4, 2, 1)]
# popcount of every byte value, used when numpy has no `bitwise_count`
_BYTE_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def n_words(n_bits: int) -> int:
    """Number of 64-bit words needed to hold ``n_bits`` bits (at least one)."""
    return max(1, (n_bits + BASE - 1) // BASE)


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack a ``(..., n)`` 0/1 array into ``(..., n_words(n))`` uint64 words."""
    bits = np.asarray(bits, dtype=np.uint8)
    n = bits.shape[-1]
    pad = n_words(n) * BASE - n
    if pad:
        widths = [(0, 0)] * (bits.ndim - 1) + [(0, pad)]
        bits = np.pad(bits, widths)
    packed = np.packbits(bits, axis=-1, bitorder="little")
    return np.ascontiguousarray(packed).view(np.uint64)


def unpack_bits(words: np.ndarray, n: int) -> np.ndarray:
    """Inverse of :func:`pack_bits`; returns a ``(..., n)`` uint8 array."""
    words = np.ascontiguousarray(words, dtype=np.uint64)
    as_bytes = words.view(np.uint8)
    return np.unpackbits(as_bytes, axis=-1, bitorder="little")[..., :n]


def popcount(words: np.ndarray, axis: int = -1) -> np.ndarray:
    """Number of set bits, summed over ``axis``."""
    words = np.ascontiguousarray(words, dtype=np.uint64)
    if hasattr(np, "bitwise_count"):  # numpy >= 2.0
        return np.bitwise_count(words).sum(axis=axis, dtype=np.int64)
    per_word = _BYTE_POPCOUNT[words.view(np.uint8)]
    per_word = per_word.reshape(words.shape + (8,)).sum(axis=-1, dtype=np.int64)
    return per_word.sum(axis=axis)


def parity(words: np.ndarray, axis: int = -1) -> np.ndarray:
    """Parity (0/1) of the number of set bits over ``axis``.

    The words are XOR-folded first, so the cost is independent of the popcount.
    """
    acc = np.bitwise_xor.reduce(np.asarray(words, dtype=np.uint64), axis=axis)
    acc = np.array(acc, dtype=np.uint64, copy=True)
    for shift in _FOLD_SHIFTS:
        acc ^= acc >> shift
    return (acc & _ONE).astype(np.uint8)


def get_bit(words: np.ndarray, i: int) -> np.ndarray:
    """Bit ``i`` of every packed vector in ``words`` (last axis = words)."""
    word, offset = divmod(i, BASE)
    return ((words[..., word] >> np.uint64(offset)) & _ONE).astype(np.uint8)


def lowest_set_bit(words: np.ndarray) -> int:
    """Index of the lowest set bit of a single packed vector, -1 when zero."""
    for w_idx, word in enumerate(np.asarray(words, dtype=np.uint64)):
        word = int(word)
        if word:
            return w_idx * BASE + ((word & -word).bit_length() - 1)
    return -1


def rref(matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Reduced row-echelon form of a dense 0/1 matrix over GF(2).

    Zero rows are dropped, so the result has exactly ``rank`` rows.

    Returns
    -------
    Tuple[np.ndarray, List[int]]
        The reduced matrix (uint8) and the pivot column of every row.

    """
    mat = np.array(matrix, dtype=np.uint8, copy=True) & 1
    n_rows, n_cols = mat.shape
    pivots: List[int] = []
    r = 0
    for col in range(n_cols):
        if r == n_rows:
            break
        candidates = np.nonzero(mat[r:, col])[0]
        if not len(candidates):
            continue
        pivot = r + candidates[0]
        if pivot != r:
            mat[[r, pivot]] = mat[[pivot, r]]
        # eliminate the column everywhere else (above and below)
        others = np.nonzero(mat[:, col])[0]
        others = others[others != r]
        mat[others] ^= mat[r]
        pivots.append(col)
        r += 1
    return mat[:r], pivots


def rank(matrix: np.ndarray) -> int:
    """GF(2) rank of a dense 0/1 matrix."""
    return len(rref(matrix)[1])


class RowBasis:
    """Incrementally built GF(2) basis over packed row vectors.

    Every inserted row is reduced against the rows already present, so a single
    pass over the basis in insertion order fully reduces any vector. This makes
    membership tests of many vectors at once a sequence of masked XORs.

    Parameters
    ----------
    n_bits: int
        Length of the (unpacked) vectors.

    """

    def __init__(self, n_bits: int):
        self.n_bits = n_bits
        self._rows: List[np.ndarray] = []
        self._pivots: List[int] = []

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[int]:
        return list(self._pivots)

    def _reduce(self, vec: np.ndarray) -> np.ndarray:
        vec = np.array(vec, dtype=np.uint64, copy=True)
        for row, pivot in zip(self._rows, self._pivots):
            if get_bit(vec, pivot):
                vec ^= row
        return vec

    def add(self, vec: np.ndarray) -> bool:
        """Insert ``vec``; returns False when it already lies in the span."""
        reduced = self._reduce(vec)
        pivot = lowest_set_bit(reduced)
        if pivot < 0:
            return False
        self._rows.append(reduced)
        self._pivots.append(pivot)
        return True

    def contains(self, vecs: np.ndarray) -> np.ndarray:
        """Row-space membership of a ``(N, n_words)`` stack of packed vectors."""
        vecs = np.array(np.atleast_2d(vecs), dtype=np.uint64, copy=True)
        for row, pivot in zip(self._rows, self._pivots):
            hit = get_bit(vecs, pivot).astype(bool)
            if hit.any():
                vecs[hit] ^= row
        return ~vecs.any(axis=-1)

    @classmethod
    def from_rows(cls, rows: np.ndarray, n_bits: int) -> RowBasis:
        basis = cls(n_bits)
        for row in np.atleast_2d(rows):
            basis.add(row)
        return basis
