import pytest

from gadget_qec.exceptions import GadgetQECError
from gadget_qec.gadgets import (
    CROSS_PATTERN,
    CrossPatternGadget,
    CXGadget,
    DCXGadget,
    cross_expand,
    derive_cross_pattern,
    enumerate_actions,
    exchange,
    is_static,
    make_gadget,
    max_propagated_weight,
    parse_levels,
    ring_gadget,
    rule_table,
    weight_curve,
)
from gadget_qec.gadgets.cross_pattern import (
    DCX4_X_RULES,
    DCX4_Z_RULES,
    DCX8_X_RULES,
    DCX8_Z_RULES,
    dcx4_candidates,
    reproduces,
)
from gadget_qec.gadgets.gadgets import commute


def _supports(paulis, attr):
    return tuple(tuple(getattr(p, attr)) for p in paulis)


# ------------------------------------- expansion ------------------------------------
def test_base_gadgets():
    assert CXGadget((3, 1)).expand() == [(3, 1)]
    assert CXGadget((3, 1), "B").expand() == [(1, 3)]
    assert DCXGadget((0, 1)).expand() == [(0, 1), (1, 0)]
    assert DCXGadget((0, 1), "B").expand() == [(1, 0), (0, 1)]


@pytest.mark.parametrize("level, n_cx", [(1, 2), (2, 8), (3, 32), (4, 128), (5, 512)])
def test_expansion_sizes(level, n_cx):
    gadget = make_gadget(level, range(2**level))
    assert len(gadget.expand()) == gadget.n_cx == n_cx


def test_orientation_b_swaps_every_cx():
    a = make_gadget(3, range(8), "A").expand()
    b = make_gadget(3, range(8), "B").expand()
    assert b == [(t, c) for c, t in a]


def test_dcx4_expansion():
    expected = [(1, 2), (2, 1), (1, 0), (0, 1), (3, 2), (2, 3), (1, 2), (2, 1)]
    assert cross_expand(2, range(4)) == expected


@pytest.mark.parametrize(
    "level, qubits, orientation",
    [(2, [0, 1, 2], "A"), (1, [0, 0], "A"), (0, [0, 1], "C"), (-1, [0, 1], "A")],
)
def test_gadget_validation(level, qubits, orientation):
    with pytest.raises(ValueError):
        make_gadget(level, qubits, orientation)


def test_cross_pattern_gadget_needs_power_of_two():
    with pytest.raises(ValueError):
        CrossPatternGadget(range(6))


def test_ring_gadget_wraps():
    assert ring_gadget(8, 2, 6).qubits == (6, 7, 0, 1)
    with pytest.raises(ValueError):
        ring_gadget(4, 3, 0)
    with pytest.raises(ValueError):
        ring_gadget(8, 1, 8)


def test_gadget_equality():
    assert make_gadget(1, (0, 1)) == DCXGadget((0, 1))
    assert make_gadget(1, (0, 1)) != make_gadget(1, (0, 1), "B")
    assert len({make_gadget(2, range(4)), make_gadget(2, range(4))}) == 1


# ------------------------------------ rule tables -----------------------------------
def test_cx_and_dcx_rules():
    assert rule_table(0).arrows() == ["XI → XX", "IX → IX", "ZI → ZI", "IZ → ZZ"]
    assert rule_table(1).arrows() == ["XI → IX", "IX → XX", "ZI → ZZ", "IZ → ZI"]


def test_dcx4_rule_table():
    table = rule_table(2)
    assert _supports(table.x_rules, "x_support") == DCX4_X_RULES
    assert _supports(table.z_rules, "z_support") == DCX4_Z_RULES
    assert table.arrows()[0] == "XIII → XIXI"
    assert table.max_weight() == 4


def test_dcx8_rule_table():
    table = rule_table(3)
    assert _supports(table.x_rules, "x_support") == DCX8_X_RULES
    assert _supports(table.z_rules, "z_support") == DCX8_Z_RULES
    assert table.max_weight() == max_propagated_weight(3) == 5
    frame = table.to_frame()
    assert len(frame) == 16
    assert frame.loc[frame["weight"].idxmax(), "output"] == "XIXXXIIX"


@pytest.mark.parametrize("level", range(0, 5))
def test_rule_tables_are_symplectic(level):
    assert rule_table(level).is_symplectic()
    assert rule_table(level, "B").is_symplectic()


@pytest.mark.parametrize("level", [1, 2, 3])
def test_exchange_symmetry(level):
    assert exchange(rule_table(level)) == rule_table(level)
    assert exchange(rule_table(level), reverse=False) == rule_table(level, "B")


def test_weight_curve():
    curve = weight_curve([1, 2, 3])
    assert curve["m"].tolist() == [2, 4, 8]
    assert curve["max_weight"].tolist() == [2, 4, 5]
    with pytest.raises(ValueError):
        max_propagated_weight(0)
    with pytest.raises(ValueError):
        rule_table(6)


# ----------------------------------- cross-pattern ----------------------------------
def test_frozen_pattern_reproduces_tables():
    assert CROSS_PATTERN.base in dcx4_candidates()
    assert reproduces(cross_expand(2, range(4)), DCX4_X_RULES, DCX4_Z_RULES)
    assert reproduces(cross_expand(3, range(8)), DCX8_X_RULES, DCX8_Z_RULES)
    assert not reproduces(cross_expand(3, range(8)), DCX8_Z_RULES, DCX8_X_RULES)


def test_derived_pattern_reproduces_tables():
    pattern = derive_cross_pattern()
    assert pattern.base in dcx4_candidates()
    assert reproduces(cross_expand(3, range(8), pattern), DCX8_X_RULES, DCX8_Z_RULES)
    assert pattern <= CROSS_PATTERN


def test_placements_need_level_two():
    with pytest.raises(ValueError):
        CROSS_PATTERN.placements(1)
    assert CROSS_PATTERN.placements(4) == CROSS_PATTERN.lift


def test_cross_pattern_error_is_package_error():
    from gadget_qec.exceptions import CrossPatternError

    assert issubclass(CrossPatternError, GadgetQECError)


# ---------------------------------- static gadgets ----------------------------------
def test_commute():
    assert commute([(0, 1)], [(0, 2)], range(3))
    assert not commute([(0, 1)], [(1, 2)], range(3))


@pytest.mark.parametrize("level", [0, 1, 2, 3])
def test_hierarchy_is_static(level):
    assert is_static(make_gadget(level, range(max(2, 2**level))))


def test_sub_units_of_cross_pattern_gadget():
    gadget = make_gadget(2, range(4), "B")
    units = gadget.sub_units()
    assert len(units) == 4
    assert [g for unit in units for g in unit] == gadget.expand()


# ----------------------------------- action table -----------------------------------
def test_parse_levels():
    assert parse_levels("cx,dcx8") == (0, 3)
    assert parse_levels(["DCX4", 1, "0"]) == (0, 1, 2)
    for bad in ("foo", [], [6]):
        with pytest.raises(ValueError):
            parse_levels(bad)


def test_ring_action_table():
    with pytest.warns(UserWarning, match="dcx8"):
        table = enumerate_actions(8, "cx,dcx,dcx4,dcx8")
    assert table.levels == (0, 1, 2)
    assert len(table) == 3 * 2 * 8
    idx = table.find(2, (0, 1, 2, 3), "A")
    assert idx == 32
    assert len(table.cx_gates(idx)) == 8
    frame = table.to_frame()
    assert frame["n_cx"].tolist() == [1] * 16 + [2] * 16 + [8] * 16
    assert table[idx].name == "dcx4@0A"
    with pytest.raises(IndexError):
        table[len(table)]
    with pytest.raises(KeyError):
        table.find(3, range(8))


def test_cx_on_two_qubits():
    table = enumerate_actions(2, "cx")
    assert len(table) == 2
    assert [a.cx_gates for a in table] == [((0, 1),), ((1, 0),)]
    assert [a.index for a in table] == [0, 1]
    with pytest.warns(UserWarning), pytest.raises(ValueError):
        enumerate_actions(2, "dcx")


@pytest.mark.parametrize(
    "levels, connectivity, n_actions",
    [
        ("cx", "ring", 14),
        ("cx,dcx", "ring", 28),
        ("cx", "complete", 42),
        ("cx,dcx", "complete", 56),
    ],
)
def test_action_counts_on_seven_qubits(levels, connectivity, n_actions):
    table = enumerate_actions(7, levels, connectivity)
    assert len(table) == n_actions
    assert len({(a.level, a.cx_gates) for a in table}) == n_actions


def test_complete_connectivity():
    table = enumerate_actions(4, "cx,dcx", connectivity="complete")
    assert len(table) == 4 * 3 + 2 * 4
    with pytest.raises(ValueError):
        enumerate_actions(4, "cx", connectivity="grid")
