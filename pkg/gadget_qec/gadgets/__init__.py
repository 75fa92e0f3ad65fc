"""The CX / DCX gadget hierarchy, its rule tables and the action table."""

__author__ = "gadget-qec contributors"

from .actions import (
    LEVEL_NAMES,
    Action,
    ActionTable,
    enumerate_actions,
    level_name,
    parse_levels,
)
from .cross_pattern import (
    CROSS_PATTERN,
    CrossPattern,
    Placement,
    cross_expand,
    derive_cross_pattern,
)
from .gadget_interface import AbstractGadget, gadget_size
from .gadgets import (
    CrossPatternGadget,
    CXGadget,
    DCXGadget,
    is_static,
    make_gadget,
    ring_gadget,
)
from .rules import RuleTable, exchange, max_propagated_weight, rule_table, weight_curve

__all__ = [
    "AbstractGadget",
    "CXGadget",
    "DCXGadget",
    "CrossPatternGadget",
    "make_gadget",
    "ring_gadget",
    "gadget_size",
    "is_static",
    "Placement",
    "CrossPattern",
    "CROSS_PATTERN",
    "cross_expand",
    "derive_cross_pattern",
    "RuleTable",
    "rule_table",
    "exchange",
    "max_propagated_weight",
    "weight_curve",
    "Action",
    "ActionTable",
    "LEVEL_NAMES",
    "level_name",
    "parse_levels",
    "enumerate_actions",
]
