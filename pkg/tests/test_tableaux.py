import pytest
from hypothesis import given, strategies as st

from algcomb.tableaux import (
    Partition,
    count_syt,
    enumerate_partitions,
    enumerate_syt,
    hook_lengths,
    is_standard_tableau,
    maj_multiplicity,
    major_index,
    q_factorial,
)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_enumerate_partitions_counts():
    for n, want in enumerate(PARTITION_COUNTS):
        assert len(list(enumerate_partitions(n))) == want


def test_partition_conjugate_involution():
    for n in range(8):
        for lam in enumerate_partitions(n):
            assert lam.conjugate().conjugate() == lam


def test_max_length_filter():
    got = list(enumerate_partitions(6, max_length=2))
    assert got == [
        Partition((6,)),
        Partition((5, 1)),
        Partition((4, 2)),
        Partition((3, 3)),
    ]


def test_hook_lengths_product_example():
    # Shape (3, 2): hooks 4,3,1 / 2,1; f = 5!/24 = 5.
    hooks = [h for row in hook_lengths(Partition((3, 2))) for h in row]
    assert sorted(hooks) == [1, 1, 2, 3, 4]
    assert count_syt((3, 2)) == 5


def test_hook_formula_matches_enumeration():
    for n in range(1, 7):
        for lam in enumerate_partitions(n):
            tableaux = list(enumerate_syt(lam))
            assert len(tableaux) == count_syt(lam)
            assert all(is_standard_tableau(t, lam) for t in tableaux)


def test_count_syt_sum_of_squares_is_factorial():
    import math

    for n in range(1, 9):
        assert (
            sum(count_syt(lam) ** 2 for lam in enumerate_partitions(n))
            == math.factorial(n)
        )


def test_major_index_example():
    # The tableau 1 3 4 / 2 5 has descents at 1 and 4.
    assert major_index(((1, 3, 4), (2, 5))) == 5


def test_maj_distribution_is_q_hook_polynomial():
    # Summing q^maj over SYT of all shapes of n weighted by f gives
    # nothing simple, but per shape the total count must be f^lam.
    for n in range(1, 7):
        for lam in enumerate_partitions(n):
            total = sum(
                maj_multiplicity(lam, i) for i in range(n * n + 1)
            )
            assert total == count_syt(lam)


def test_q_factorial_coefficients():
    assert list(q_factorial(3).coeffs) == [1, 2, 2, 1]
    assert q_factorial(4)(1) == 24


@given(st.integers(min_value=1, max_value=8))
def test_q_factorial_at_one_is_factorial(n):
    import math

    assert q_factorial(n)(1) == math.factorial(n)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    # Trailing zeros are stripped, not rejected.
    assert Partition((2, 0)) == Partition((2,))
