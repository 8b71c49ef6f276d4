import io

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from magmalab.algebra import MagmaTable
from magmalab.instances import cyclic_group, monoid_with_absorber, single_witness_table
from magmalab.tableio import (
    TableFormatError,
    format_matrix,
    format_table,
    load_matrix,
    load_table,
    parse_matrix,
    parse_table,
)


def test_parse_minimal():
    t = parse_table("n=2\n0 1\n1 0\n")
    assert t.rows == ((0, 1), (1, 0)) and t.identity is None


def test_parse_headers_and_comments():
    text = "# Z3\nn=3\nidentity=0\ncodomain=0, 1 ,2\n# row 0 next\n0 1 2\n1 2 0\n\n2 0 1\n"
    t = parse_table(text)
    assert t == cyclic_group(3)


def test_trailing_comment_is_not_data():
    with pytest.raises(TableFormatError):
        parse_table("n=2\n0 1 # x\n1 0\n")


def test_codomain_space_separated():
    t = parse_table("n=3\ncodomain=0 1\n0 0 0\n0 1 0\n0 0 0\n")
    assert t.codomain == {0, 1}


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("0 1\n1 0\n", 1, None),  # missing n=
        ("n=2\n0 1\n1 x\n", 3, 2),
        ("n=2\n0 1\n1 2\n", 3, 2),
        ("n=2\n0 1\n1\n", 3, None),
        ("n=2\n0 1\n", None, None),
        ("n=2\n0 1\n1 0\n0 0\n", 4, None),
    ],
)
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(TableFormatError) as exc:
        parse_table(text, source="t.txt")
    if line is not None:
        assert exc.value.line == line
    if column is not None:
        assert exc.value.column == column
    assert "t.txt" in str(exc.value)


def test_codomain_must_cover_values():
    with pytest.raises(TableFormatError):
        parse_table("n=2\ncodomain=0\n0 1\n1 0\n")


@pytest.mark.parametrize("table", [cyclic_group(5), monoid_with_absorber(4), single_witness_table(6)])
def test_roundtrip(table):
    assert parse_table(format_table(table, comment="x")) == table


@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n)))
def test_roundtrip_property(flat):
    n = round(len(flat) ** 0.5)
    t = MagmaTable(np.array(flat).reshape(n, n))
    assert parse_table(format_table(t)) == t


def test_matrix_roundtrip_and_validation():
    bits = np.array([[1, 0, 1], [0, 0, 1], [1, 1, 1]], dtype=np.uint8)
    assert np.array_equal(parse_matrix(format_matrix(bits, "m")), bits)
    with pytest.raises(TableFormatError):
        parse_matrix("n=2\n0 2\n1 1\n")
    with pytest.raises(TableFormatError):
        parse_matrix("n=2\nidentity=0\n0 1\n1 1\n")


def test_load_from_path_and_file(tmp_path):
    p = tmp_path / "z4.txt"
    p.write_text(format_table(cyclic_group(4)))
    assert load_table(p) == cyclic_group(4)
    assert load_table(io.StringIO(p.read_text())) == cyclic_group(4)
    q = tmp_path / "m.txt"
    q.write_text("n=2\n1 1\n0 1\n")
    assert load_matrix(str(q)).tolist() == [[1, 1], [0, 1]]
