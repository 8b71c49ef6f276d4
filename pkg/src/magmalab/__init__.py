"""Query-counting deciders for properties of finite multiplication tables."""

from magmalab.algebra import (
    InverseMode,
    MagmaTable,
    Property,
    PropertyReport,
    Side,
    element_order,
    find_identity,
    has_inverse,
    is_associative,
    is_group,
    is_loop,
    is_monoid,
    is_quasigroup,
)
from magmalab.group_test import GroupTestParams, group_test_randomized, naive_group_test
from magmalab.oracle import CountingOracle, RunRecord, make_rng, spawn_seeds
from magmalab.tableio import TableFormatError, load_matrix, load_table, parse_matrix, parse_table

__all__ = [
    "CountingOracle",
    "GroupTestParams",
    "InverseMode",
    "MagmaTable",
    "Property",
    "PropertyReport",
    "RunRecord",
    "Side",
    "TableFormatError",
    "element_order",
    "find_identity",
    "group_test_randomized",
    "has_inverse",
    "is_associative",
    "is_group",
    "is_loop",
    "is_monoid",
    "is_quasigroup",
    "load_matrix",
    "load_table",
    "make_rng",
    "naive_group_test",
    "parse_matrix",
    "parse_table",
    "spawn_seeds",
]
