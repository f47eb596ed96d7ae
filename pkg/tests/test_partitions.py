import pytest
from hypothesis import given

from dschur.partitions import (
    Partition,
    is_horizontal_strip,
    is_vertical_strip,
    partitions_of,
    partitions_up_to,
    ribbon_height,
    skew_cells,
    subpartitions,
)

from strategies import partitions

# number of partitions of n, n = 0..10
P = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_construction_normalises_and_validates():
    assert Partition([3, 1, 0, 0]) == (3, 1)
    assert Partition() == ()
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(TypeError):
        Partition([1.5])


@given(partitions(max_size=12))
def test_conjugate_is_size_preserving_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(11)] == P
    assert len(partitions_up_to(5)) == sum(P[:6])
    assert all(len(p) <= 2 for p in partitions_of(6, max_length=2))


@given(partitions(max_size=7))
def test_subpartitions_are_contained(lam):
    subs = subpartitions(lam)
    assert len(subs) == len(set(subs))
    assert all(lam.contains(mu) for mu in subs)
    expected = sum(1 for n in range(lam.size + 1) for mu in partitions_of(n) if lam.contains(mu))
    assert len(subs) == expected


def test_strips():
    assert is_horizontal_strip((3, 1), (1,))
    assert not is_horizontal_strip((2, 2), (1,))
    assert is_vertical_strip((2, 2), (1, 1))
    assert not is_vertical_strip((3,), (1,))
    assert not is_horizontal_strip((1,), (2,))


def test_skew_cells_and_ribbons():
    assert skew_cells((2, 2), (1,)) == [(1, 2), (2, 1), (2, 2)]
    assert ribbon_height((2, 2), (1,)) == 1
    assert ribbon_height((2, 2), ()) is None  # contains a 2x2 block
    assert ribbon_height((2, 1), (1, 1)) == 0
    assert ribbon_height((3, 1), (1, 1)) == 0
    assert ribbon_height((2, 1, 1), (1,)) is None  # disconnected
    with pytest.raises(ValueError):
        skew_cells((1,), (2,))


@given(partitions(max_size=8))
def test_partitions_of_conjugate_closed(lam):
    assert lam.conjugate() in partitions_of(lam.size)
