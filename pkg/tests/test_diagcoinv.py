import pytest

from algcomb.diagcoinv import (
    antiinvariant_dimensions,
    bigraded_dimensions,
    catalan,
    character_multiplicities,
    count_parking_functions,
    diagonal_invariant_generators,
    single_set_quotient,
    total_dimension,
)
from algcomb.groebner import ResourceCapExceeded
from algcomb.tableaux import Partition, q_factorial


def test_generator_count():
    for n in range(1, 5):
        assert len(diagonal_invariant_generators(n)) == n * (n + 3) // 2


def test_totals_match_tree_formula():
    for n in range(1, 4):
        assert total_dimension(n) == (n + 1) ** (n - 1)


def test_parking_function_count_agrees():
    for n in range(1, 7):
        assert count_parking_functions(n) == (n + 1) ** (n - 1)


def test_bigraded_symmetry():
    for n in range(1, 4):
        dims = bigraded_dimensions(n)
        assert dims == {(j, i): d for (i, j), d in dims.items()}


def test_antiinvariants_are_catalan():
    for n in range(1, 4):
        _, total = antiinvariant_dimensions(n)
        assert total == catalan(n)


def test_n3_character_sizes():
    mults = character_multiplicities(3)
    # Total dimension recovered from multiplicities times f^lam.
    from algcomb.tableaux import count_syt

    total = sum(m * count_syt(lam) for (_, lam), m in mults.items())
    assert total == 16


def test_single_set_degeneration():
    import math

    for n in range(1, 5):
        _, std = single_set_quotient(n)
        assert len(std) == math.factorial(n)
        by_degree = {}
        for m in std:
            by_degree[sum(m)] = by_degree.get(sum(m), 0) + 1
        for i, c in enumerate(q_factorial(n).coeffs):
            assert by_degree.get(i, 0) == c


def test_n_cap_enforced():
    with pytest.raises(ResourceCapExceeded):
        total_dimension(7)
