import numpy as np
import pytest
from pytest_lazyfixture import lazy_fixture as lf

from gadget_qec.stabilizer import (
    PauliString,
    PauliTableau,
    StabilizerTableau,
    apply_cx,
    apply_h,
    canonical_form,
    observation,
    propagate,
)

from .utils import dense_cx, dense_pauli, random_cx, random_css_tableau


@pytest.mark.parametrize(
    "label_in, label_out",
    [("XI", "XX"), ("IX", "IX"), ("ZI", "ZI"), ("IZ", "ZZ"), ("YI", "YX")],
)
def test_cx_conjugation_rules(label_in, label_out):
    (out,) = propagate([PauliString.from_label(label_in)], [(0, 1)])
    assert str(out) == label_out


def test_hadamard_swaps_and_flips_y_sign():
    t = PauliTableau(2, [PauliString.from_label(s) for s in ("XI", "ZI", "YZ")])
    t.apply_h(0)
    assert t.to_labels() == ["ZI", "XI", "-YZ"]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cx_evolution_matches_dense_conjugation(n, rng):
    for _ in range(10):
        labels = ["".join(rng.choice(list("IXZY"), n)) for _ in range(3)]
        gates = random_cx(n, 6, rng)
        paulis = [PauliString.from_label(s) for s in labels]
        evolved = propagate(paulis, gates)
        u = np.eye(2**n)
        for c, t in gates:
            u = dense_cx(n, c, t) @ u
        for p, q in zip(paulis, evolved):
            assert np.allclose(u @ dense_pauli(p) @ u.T, dense_pauli(q))


def test_gate_validation():
    t = StabilizerTableau.from_labels(["XX"], k=1)
    with pytest.raises(ValueError):
        t.apply_cx(1, 1)
    with pytest.raises(IndexError):
        t.apply_cx(0, 2)
    with pytest.raises(IndexError):
        t.apply_h(-1)


def test_functional_gates_do_not_mutate():
    t = StabilizerTableau.from_labels(["XI", "IZ"], k=0)
    evolved = apply_cx(t, 0, 1)
    assert t.to_labels() == ["XI", "IZ"]
    assert evolved.to_labels() == ["XX", "ZZ"]
    assert apply_h(t, 0).to_labels() == ["ZI", "IZ"]


def test_row_count_must_match_k():
    with pytest.raises(ValueError):
        StabilizerTableau.from_labels(["XX", "ZZ"], k=1)


@pytest.mark.parametrize("code", [lf("steane"), lf("golay")])
def test_known_codes_are_valid(code):
    code.check_invariants()
    assert code.is_css()
    assert code.n_rows == code.n - code.k


def test_golay_generators(golay):
    assert golay.n == 23 and golay.k == 1
    assert set(golay.row_weights().tolist()) == {8}


def test_dependent_rows_fail_invariants():
    t = StabilizerTableau.from_labels(["XXI", "IXX", "XIX"], k=0)
    with pytest.raises(AssertionError):
        t.check_invariants()
    t = StabilizerTableau.from_labels(["XI", "ZI"], k=0)
    with pytest.raises(AssertionError):
        t.check_invariants()


def test_canonical_form_ignores_row_operations(steane):
    rows = steane.rows
    shuffled = [rows[1] * rows[0], rows[0], rows[2]]
    shuffled += [rows[5], rows[3] * rows[4], rows[4]]
    other = StabilizerTableau(7, shuffled, k=1)
    assert np.array_equal(canonical_form(other), canonical_form(steane))
    assert not np.array_equal(observation(other), observation(steane))
    assert np.array_equal(
        other.observation("canonical"), steane.observation("canonical")
    )


def test_canonical_form_separates_codes(steane):
    # CX(0, 1) turns a weight-4 X generator into a weight-5 one
    other = apply_cx(steane, 0, 1)
    assert not np.array_equal(other.canonical_form(), steane.canonical_form())
    assert other.canonical_form().shape == (6, 14)


def test_observation_shapes(steane):
    assert steane.observation().shape == (2 * 7 * 6,)
    assert set(np.unique(steane.observation())) <= {0, 1}
    with pytest.raises(ValueError):
        steane.observation("dense")


def test_permute_qubits(steane):
    perm = [6, 5, 4, 3, 2, 1, 0]
    flipped = steane.permute_qubits(perm)
    assert flipped.to_labels()[0] == "XXXXIII"
    flipped.check_invariants()


def test_copy_is_independent(steane):
    c = steane.copy()
    c.apply_cx(0, 1)
    assert c != steane
    assert steane.copy() == steane


def test_random_circuits_keep_invariants(rng):
    for _ in range(20):
        random_css_tableau(int(rng.integers(3, 9)), rng).check_invariants()
