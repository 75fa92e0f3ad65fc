import numpy as np
import pytest

from gadget_qec.stabilizer import PauliString, commutes, multiply, weight
from gadget_qec.stabilizer.gf2 import RowBasis, pack_bits, popcount, rank, rref

from .utils import dense_pauli


def _random_pauli(n, rng):
    return PauliString.from_bits(
        rng.integers(0, 2, n), rng.integers(0, 2, n), int(rng.integers(0, 2))
    )


@pytest.mark.parametrize("label", ["IIIXXXX", "-XZ", "YIZ", "X"])
def test_label_round_trip(label):
    assert str(PauliString.from_label(label)) == label


def test_from_label_rejects_bad_letters():
    with pytest.raises(ValueError):
        PauliString.from_label("XQZ")
    with pytest.raises(ValueError):
        PauliString.from_label("")


def test_from_bits_length_mismatch():
    with pytest.raises(ValueError):
        PauliString.from_bits([1, 0], [0, 1, 1])


def test_weight_and_supports():
    p = PauliString.from_label("XIZYI")
    assert weight(p) == 3
    assert p.x_support == [0, 3]
    assert p.z_support == [2, 3]
    assert not p.is_x_type and not p.is_z_type
    assert PauliString.from_label("XIX").is_x_type
    assert PauliString.identity(4).weight == 0


def test_pauli_string_is_immutable():
    p = PauliString.from_label("XZ")
    with pytest.raises(AttributeError):
        p.sign = 1
    with pytest.raises(ValueError):
        p.x[0] = 0


@pytest.mark.parametrize("n", [1, 3, 4])
def test_commutes_matches_dense(n, rng):
    for _ in range(50):
        p, q = _random_pauli(n, rng), _random_pauli(n, rng)
        a, b = dense_pauli(p), dense_pauli(q)
        assert commutes(p, q) == np.allclose(a @ b, b @ a)


@pytest.mark.parametrize("n", [1, 2, 4])
def test_multiply_matches_dense(n, rng):
    for _ in range(50):
        p, q = _random_pauli(n, rng), _random_pauli(n, rng)
        assert np.allclose(dense_pauli(multiply(p, q)), dense_pauli(p) @ dense_pauli(q))
        assert p * q == multiply(p, q)


def test_multi_word_strings():
    n = 130
    p = PauliString.from_support(n, x=[0, 64, 129])
    q = PauliString.from_support(n, z=[64, 100])
    assert p.weight == 3
    assert not commutes(p, q)
    assert commutes(p, PauliString.from_support(n, z=[64, 129]))
    assert multiply(p, p) == PauliString.identity(n)


def test_different_sizes_raise():
    with pytest.raises(ValueError):
        commutes(PauliString.from_label("XX"), PauliString.from_label("XXX"))


def test_permute():
    p = PauliString.from_label("XZI")
    assert str(p.permute([2, 0, 1])) == "ZIX"


def test_hash_and_equality():
    assert {PauliString.from_label("XZ"), PauliString.from_label("XZ")} == {
        PauliString.from_label("XZ")
    }
    assert PauliString.from_label("XZ") != PauliString.from_label("-XZ")


# --------------------------------------- GF(2) --------------------------------------
def test_popcount_multi_word():
    bits = np.zeros(130, dtype=np.uint8)
    bits[[0, 63, 64, 129]] = 1
    assert int(popcount(pack_bits(bits))) == 4


def test_rref_is_canonical(rng):
    m = rng.integers(0, 2, (5, 9)).astype(np.uint8)
    mixed = m[rng.permutation(5)]
    mixed[0] ^= mixed[1]
    r1, p1 = rref(m)
    r2, p2 = rref(mixed)
    assert np.array_equal(r1, r2)
    assert p1 == p2
    assert rank(m) == len(r1)


def test_row_basis_membership():
    rows = np.array([[1, 1, 0, 0], [0, 1, 1, 0]], dtype=np.uint8)
    basis = RowBasis.from_rows(pack_bits(rows), 4)
    assert len(basis) == 2
    queries = np.array([[1, 0, 1, 0], [0, 0, 0, 1]], dtype=np.uint8)
    assert basis.contains(pack_bits(queries).reshape(2, -1)).tolist() == [True, False]
