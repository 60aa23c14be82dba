"""Semi-standard tableau enumeration in both conventions."""

import pytest

from phasetoda.combinatorics import Partition, SkewShape, Tableau, enumerate_tableaux
from phasetoda.errors import ShapeViolation


def shape(outer, inner=()):
    return SkewShape(Partition(outer), Partition(inner))


def test_single_cell():
    tabs = list(enumerate_tableaux(shape((1,)), 2, "ascending"))
    assert [t.rows for t in tabs] == [((1,),), ((2,),)]


def test_shape_21_two_letters():
    tabs = list(enumerate_tableaux(shape((2, 1)), 2, "ascending"))
    assert len(tabs) == 2
    assert {t.rows for t in tabs} == {((1, 1), (2,)), ((1, 2), (2,))}


def test_descending_contains_running_example():
    tabs = {t.rows for t in enumerate_tableaux(shape((3, 1, 1)), 3, "descending")}
    assert ((3, 1, 1), (2,), (1,)) in tabs


def test_skew_enumeration():
    tabs = list(enumerate_tableaux(shape((1, 1), (1,)), 1, "ascending"))
    assert [t.rows for t in tabs] == [((), (1,))]


def test_weight():
    tab = Tableau(shape((3, 1, 1)), ((3, 1, 1), (2,), (1,)), "descending")
    assert tab.weight(3) == (3, 1, 1)


def test_validation_rejects_bad_fillings():
    with pytest.raises(ShapeViolation):
        Tableau(shape((2,)), ((2, 1),), "ascending")
    with pytest.raises(ShapeViolation):
        Tableau(shape((1, 1)), ((1,), (1,)), "ascending")
    with pytest.raises(ShapeViolation):
        Tableau(shape((1, 1)), ((1,), (2,)), "descending")


def test_conventions_count_equal():
    # content-reversal bijection: both conventions have the same cardinality
    for outer in ((2, 1), (2, 2), (3, 1)):
        asc = sum(1 for _ in enumerate_tableaux(shape(outer), 3, "ascending"))
        desc = sum(1 for _ in enumerate_tableaux(shape(outer), 3, "descending"))
        assert asc == desc


def test_stream_is_restartable():
    gen = enumerate_tableaux(shape((2, 1)), 2, "ascending")
    first = list(gen)
    second = list(enumerate_tableaux(shape((2, 1)), 2, "ascending"))
    assert [t.rows for t in first] == [t.rows for t in second]
