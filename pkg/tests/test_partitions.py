from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import grassmannian_perms_brute
from schubert.errors import DomainError, RankError, SizeError
from schubert.partitions import (
    KStrictPartition,
    Partition,
    PivotSet,
    cell_of,
    enumerate_grassmannian_permutations,
    is_k_strict,
    k_strict_partitions_in_box,
    parse_matrix,
    partition_to_subset,
    partitions_in_box,
    permutation_to_subset,
    strict_partitions_in_box,
    subset_to_partition,
)


def test_partition_normalizes_trailing_zeros():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert Partition((2, 1, 0)).parts == (2, 1)
    assert Partition((0, 0)) == Partition(())
    assert Partition((3, 3, 1)).weight() == 7
    assert Partition((3, 3, 1, 0)).length() == 3


@pytest.mark.parametrize("bad", [(1, 2), (2, -1), (3, 0, 1)])
def test_partition_rejects_non_partitions(bad):
    with pytest.raises(DomainError):
        Partition(bad)


def test_parse_reports_position():
    assert Partition.parse("5, 3,1") == Partition((5, 3, 1))
    assert Partition.parse("") == Partition(())
    with pytest.raises(DomainError, match="position 3"):
        Partition.parse("5,3,4")
    with pytest.raises(DomainError, match="part 2"):
        Partition.parse("5,x")


@pytest.mark.parametrize(
    "m, n, pivots, parts",
    [(1, 2, (1,), (1,)), (2, 4, (3, 4), ()), (2, 4, (1, 2), (2, 2))],
)
def test_subset_partition_examples(m, n, pivots, parts):
    pset = PivotSet(pivots, n)
    assert subset_to_partition(pset) == Partition(parts)
    assert partition_to_subset(Partition(parts), m, n) == pset


@pytest.mark.parametrize("pivots", [(2, 1), (0, 1), (1, 5), (1, 1)])
def test_pivot_set_validation(pivots):
    with pytest.raises(DomainError):
        PivotSet(pivots, 4)


def test_partition_outside_box():
    with pytest.raises(DomainError):
        partition_to_subset(Partition((3,)), 2, 4)
    with pytest.raises(DomainError):
        partition_to_subset(Partition((1, 1, 1)), 2, 4)


def test_bijection_round_trip_exhaustive():
    for n in range(0, 11):
        for m in range(0, n + 1):
            seen = set()
            for lam in partitions_in_box(m, n - m):
                pset = partition_to_subset(lam, m, n)
                assert subset_to_partition(pset) == lam
                seen.add(pset.indices)
            assert len(seen) == comb(n, m)


@pytest.mark.parametrize(
    "parts, k, expected",
    [((3, 3, 1), 3, True), ((4, 4, 1), 3, False), ((5, 4, 2, 2), 2, True), ((), 0, True), ((1, 1), 0, False)],
)
def test_is_k_strict(parts, k, expected):
    assert is_k_strict(Partition(parts), k) is expected


def test_k_strict_type():
    KStrictPartition(Partition((5, 4, 2, 2)), 2)
    with pytest.raises(DomainError):
        KStrictPartition(Partition((4, 4, 1)), 3)


def test_box_enumerators_count():
    assert sum(1 for _ in partitions_in_box(5, 6)) == comb(11, 5)
    assert sum(1 for _ in strict_partitions_in_box(5, 8)) == sum(comb(8, r) for r in range(6))
    for lam in strict_partitions_in_box(4, 6):
        assert lam.is_strict()
    ks = list(k_strict_partitions_in_box(1, 3, 3))
    assert all(is_k_strict(x.partition, 1) for x in ks)
    assert Partition((1, 1, 1)) in [x.partition for x in ks]
    assert Partition((2, 2)) not in [x.partition for x in ks]


def test_grassmannian_perm_examples():
    assert enumerate_grassmannian_permutations(1, 2) == [(1, 2), (2, 1)]
    assert enumerate_grassmannian_permutations(0, 3) == [(1, 2, 3)]
    assert len(enumerate_grassmannian_permutations(2, 4)) == 6


def test_grassmannian_perms_match_brute_force():
    for n in range(0, 9):
        for m in range(0, n + 1):
            perms = enumerate_grassmannian_permutations(m, n)
            assert len(perms) == comb(n, m)
            if n <= 7:
                assert perms == grassmannian_perms_brute(m, n)


def test_perm_guard():
    with pytest.raises(SizeError):
        enumerate_grassmannian_permutations(2, 13)


def test_permutation_to_subset():
    assert permutation_to_subset((2, 4, 1, 3), 2) == PivotSet((2, 4), 4)


def _identity_block(m, n, start):
    rows = []
    for r in range(m):
        row = [Fraction(0)] * n
        row[start + r] = Fraction(1)
        rows.append(row)
    return rows


def test_cell_examples():
    pset, lam = cell_of(_identity_block(2, 5, 0))
    assert pset.indices == (1, 2) and lam == Partition((3, 3))
    pset, lam = cell_of(_identity_block(2, 5, 3))
    assert pset.indices == (4, 5) and lam == Partition(())
    pset, lam = cell_of(parse_matrix("0 5 7"))
    assert pset == PivotSet((2,), 3) and lam == Partition((1,))


def test_cell_rank_error():
    with pytest.raises(RankError):
        cell_of(parse_matrix("1 2 3\n2 4 6"))


def test_parse_matrix_rationals():
    assert parse_matrix("1/2 3\n# comment\n-4 0/5\n") == [[Fraction(1, 2), 3], [-4, 0]]
    with pytest.raises(DomainError):
        parse_matrix("1 2\n3")


small_q = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def full_rank_and_invertible(draw):
    m = draw(st.integers(1, 3))
    n = draw(st.integers(m, 5))
    rows = draw(st.lists(st.lists(small_q, min_size=n, max_size=n), min_size=m, max_size=m))
    g = draw(st.lists(st.lists(small_q, min_size=m, max_size=m), min_size=m, max_size=m))
    return rows, g


def _det(a):
    from schubert.partitions import rref

    _, piv = rref(a)
    return len(piv) == len(a)


@settings(max_examples=150, deadline=None)
@given(full_rank_and_invertible())
def test_cell_invariant_under_row_operations(data):
    rows, g = data
    if not _det(rows) or not _det(g):
        return
    moved = [[sum(g[r][t] * rows[t][c] for t in range(len(rows))) for c in range(len(rows[0]))]
             for r in range(len(g))]
    assert cell_of(moved) == cell_of(rows)
