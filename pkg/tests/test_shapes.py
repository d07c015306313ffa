import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsym import (
    EMPTY,
    NotContained,
    Partition,
    ParseError,
    StrictPartition,
    enum_strict_between,
    pad_for_pfaffian,
    shifted_cells,
)


def sp(*parts):
    return StrictPartition(tuple(parts))


def test_shifted_cells_straight():
    shape = shifted_cells(sp(2, 1), EMPTY)
    assert shape.cells == {(1, 1), (1, 2), (2, 2)}


def test_shifted_cells_skew():
    shape = shifted_cells(sp(3, 1), sp(2))
    assert shape.cells == {(1, 3), (2, 2)}
    assert shape.diagonal_rows() == [2]


def test_shifted_cells_not_contained():
    with pytest.raises(NotContained):
        shifted_cells(sp(1), sp(2))


def test_enum_strict_between_full():
    got = {p.parts for p in enum_strict_between(EMPTY, sp(2, 1))}
    assert got == {(), (1,), (2,), (2, 1)}


def test_enum_strict_between_equal_and_empty():
    assert enum_strict_between(sp(3, 1), sp(3, 1)) == [sp(3, 1)]
    assert enum_strict_between(sp(2), sp(1)) == []


def test_pad_for_pfaffian():
    assert pad_for_pfaffian(sp(3, 1), sp(2)) == ((3, 1), (2, 0))
    assert pad_for_pfaffian(sp(3, 2, 1), EMPTY) == ((3, 2, 1, 0), ())
    assert pad_for_pfaffian(sp(2, 1), EMPTY) == ((2, 1), ())
    assert pad_for_pfaffian(sp(3, 1), sp(2, 1)) == ((3, 1), (2, 1))


def test_parse_print():
    assert str(StrictPartition.from_string("7,6,5,2,1")) == "7,6,5,2,1"
    assert StrictPartition.from_string("") == EMPTY
    with pytest.raises(ParseError):
        Partition.from_string("1,2")  # increasing
    with pytest.raises(ParseError):
        StrictPartition.from_string("2,2")
    with pytest.raises(ParseError):
        Partition.from_string("a,b")


def test_partition_transpose_and_weight():
    lam = Partition((3, 1))
    assert lam.transpose() == Partition((2, 1, 1))
    assert lam.weight == 4
    assert lam.transpose().transpose() == lam


def test_subpartitions():
    subs = {p.parts for p in Partition((2, 1)).subpartitions()}
    assert subs == {(), (1,), (2,), (1, 1), (2, 1)}


strict_parts = st.lists(st.integers(1, 6), max_size=4, unique=True).map(
    lambda xs: StrictPartition(tuple(sorted(xs, reverse=True)))
)


@given(lam=strict_parts)
@settings(max_examples=80, deadline=None)
def test_shifted_diagram_row_structure(lam):
    shape = shifted_cells(lam, EMPTY)
    assert shape.size() == lam.weight
    for i in range(1, lam.length + 1):
        row = shape.row_cols(i)
        assert len(row) == lam.part(i)
        assert row[0] == i


@given(a=strict_parts, b=strict_parts, c=strict_parts)
@settings(max_examples=80, deadline=None)
def test_containment_order(a, b, c):
    if a.contains(b) and b.contains(c):
        assert a.contains(c)
    if a.contains(b) and b.contains(a):
        assert a == b


@given(lam=strict_parts)
@settings(max_examples=40, deadline=None)
def test_enum_strict_between_matches_filtration(lam):
    got = {p.parts for p in enum_strict_between(EMPTY, lam)}

    def all_strict(max_part, max_len):
        out = [()]

        def rec(prev, acc):
            if len(acc) == max_len:
                return
            for p in range(prev - 1, 0, -1):
                out.append(acc + (p,))
                rec(p, acc + (p,))

        rec(max_part + 1, ())
        return out

    expected = {
        parts
        for parts in all_strict(lam.part(1), lam.length)
        if lam.contains(StrictPartition(parts))
    }
    assert got == expected
    assert len(got) == len(list(enum_strict_between(EMPTY, lam)))
