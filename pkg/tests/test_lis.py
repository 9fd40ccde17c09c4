import math
from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from algcomb.lis import (
    count_by_is_bruteforce,
    exhaustive_chi_n,
    expected_is_exact,
    gessel_series,
    greene_bruteforce,
    greene_shape,
    is_length,
    permutation_major_index,
    rsk,
    sample_chi_n,
    u2_closed_form,
    u3_closed_form,
    chi_statistic,
)
from algcomb.tableaux import q_factorial, major_index


def test_is_length_examples():
    assert is_length((2, 7, 4, 1, 6, 3, 9, 5, 8)) == 4
    assert is_length((1, 2, 3)) == 3
    assert is_length((3, 2, 1)) == 1


def test_is_length_rejects_non_permutations():
    with pytest.raises(ValueError):
        is_length((1, 1, 2))


def test_rsk_shapes_and_greene():
    w = (2, 4, 7, 9, 5, 1, 3, 6, 8)
    p, q = rsk(w)
    assert tuple(len(r) for r in p) == (5, 3, 1)
    assert greene_shape(w) == (5, 3, 1)
    assert greene_bruteforce(w, 1) == 5
    assert greene_bruteforce(w, 2) == 8
    assert greene_bruteforce(w, 3) == 9


def test_rsk_recording_tableau_is_standard():
    from algcomb.tableaux import is_standard_tableau

    for w in permutations(range(1, 6)):
        p, q = rsk(w)
        assert is_standard_tableau(q)
        assert tuple(len(r) for r in p) == tuple(len(r) for r in q)


@settings(deadline=None, max_examples=60)
@given(st.permutations(list(range(1, 8))))
def test_greene_matches_rsk_partial_sums(w):
    shape = greene_shape(w)
    for k in range(1, len(w) + 1):
        assert greene_bruteforce(w, k) == sum(shape[:k])


def test_expected_is_exact_small_values():
    assert expected_is_exact(1) == 1
    assert expected_is_exact(2) == Fraction(3, 2)
    assert expected_is_exact(3) == 2
    assert expected_is_exact(4) == Fraction(29, 12)


def test_expected_is_matches_brute_force():
    for n in range(1, 7):
        total = sum(is_length(w) for w in permutations(range(1, n + 1)))
        assert expected_is_exact(n) == Fraction(total, math.factorial(n))


def test_gessel_u2_is_catalan():
    _, u2 = gessel_series(2, 20)
    for n in range(11):
        assert u2[n] == u2_closed_form(n)
        assert u2[n] == math.comb(2 * n, n) // (n + 1)


def test_gessel_u3_three_way():
    _, u3 = gessel_series(3, 14)
    for n in range(6):
        assert u3[n] == u3_closed_form(n)
        assert u3[n] == count_by_is_bruteforce(n, 3)
    assert u3[:6] == [1, 1, 2, 6, 23, 103]


def test_u3_printed_variant_fails_at_n2():
    with pytest.raises(ArithmeticError):
        u3_closed_form(2, printed_variant=True)


def test_uk_saturates_at_factorial():
    _, u5 = gessel_series(5, 10)
    for n in range(6):
        assert u5[n] == math.factorial(n)


def test_maj_rsk_bridge():
    n = 6
    counts = {}
    for w in permutations(range(1, n + 1)):
        _, q = rsk(w)
        m = major_index(q)
        counts[m] = counts.get(m, 0) + 1
    for i, c in enumerate(q_factorial(n).coeffs):
        assert counts.get(i, 0) == c


def test_permutation_major_index():
    assert permutation_major_index((3, 1, 5, 4, 2)) == 8
    assert permutation_major_index((1, 2, 3)) == 0


def test_sampling_determinism():
    a = sample_chi_n(25, 40, seed=5)
    b = sample_chi_n(25, 40, seed=5, batch=3)
    assert np.array_equal(a, b)
    c = sample_chi_n(25, 40, seed=6)
    assert not np.array_equal(a, c)


def test_exhaustive_chi_mean_matches_expectation():
    n = 5
    values = exhaustive_chi_n(n)
    want = chi_statistic(float(expected_is_exact(n)), n)
    assert abs(values.mean() - want) < 1e-12
