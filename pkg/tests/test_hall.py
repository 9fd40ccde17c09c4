import pytest

from algcomb.hall import (
    AbelianPGroup,
    SizeCapExceeded,
    enumerate_subgroups,
    hall_count,
    hall_count_table,
    hall_polynomial,
    maley_positivity,
)
from algcomb.symfunc import lr_coefficient
from algcomb.tableaux import Partition, enumerate_partitions
from algcomb.univariate import IntPolynomial


def test_subgroup_counts_small_groups():
    assert len(enumerate_subgroups(AbelianPGroup(2, (1,)))) == 2
    assert len(enumerate_subgroups(AbelianPGroup(2, (1, 1)))) == 5
    assert len(enumerate_subgroups(AbelianPGroup(3, (2,)))) == 3
    # Z/4 x Z/2 has 8 subgroups.
    assert len(enumerate_subgroups(AbelianPGroup(2, (2, 1)))) == 8


def test_subgroup_records_are_consistent():
    group = AbelianPGroup(2, (2, 1))
    for record in enumerate_subgroups(group):
        assert record.type.size + record.quotient_type.size == 3
        assert 2 ** record.type.size == len(record.elements)


def test_hall_count_examples():
    for p in (2, 3, 5):
        assert hall_count((2,), (1,), (1,), p) == 1
        assert hall_count((1, 1), (1,), (1,), p) == p + 1
    assert hall_count((1, 1), (2,), (), 2) == 0


def test_hall_count_size_mismatch_is_zero():
    assert hall_count((2, 1), (1,), (1,), 2) == 0


def test_hall_polynomial_examples():
    assert hall_polynomial((1, 1), (1,), (1,)).coeffs == (1, 1)
    assert hall_polynomial((2,), (1,), (1,)).coeffs == (1,)
    g = hall_polynomial((2, 1), (1, 1), (1,))
    assert g(2) == hall_count((2, 1), (1, 1), (1,), 2)
    assert g(7) == hall_count((2, 1), (1, 1), (1,), 7)


def test_maley_positivity():
    assert maley_positivity(IntPolynomial((1, 1)))  # t + 1
    assert maley_positivity(IntPolynomial((1,)))
    assert not maley_positivity(IntPolynomial((-2, 1)))  # t - 2


def test_nonvanishing_equivalence_size_4():
    for total in range(5):
        for lam in enumerate_partitions(total):
            for p in (2, 3):
                table = hall_count_table(lam, p)
                for a in range(total + 1):
                    for mu in enumerate_partitions(a):
                        for nu in enumerate_partitions(total - a):
                            g = table.get((mu, nu), 0)
                            c = lr_coefficient(mu, nu, lam)
                            assert (g != 0) == (c != 0)


def test_duality_and_totals():
    lam = Partition((2, 1))
    for p in (2, 3):
        table = hall_count_table(lam, p)
        group_total = len(enumerate_subgroups(AbelianPGroup(p, lam)))
        assert sum(table.values()) == group_total
        for (mu, nu), g in table.items():
            assert table.get((nu, mu), 0) == g


def test_size_cap():
    with pytest.raises(SizeCapExceeded):
        enumerate_subgroups(AbelianPGroup(2, (13,)))
