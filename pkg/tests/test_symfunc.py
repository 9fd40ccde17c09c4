from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from algcomb.multipoly import MultiPoly
from algcomb.symfunc import (
    elementary_symmetric,
    is_symmetric,
    kostka,
    lr_coefficient,
    schur_expand,
    schur_poly,
    schur_poly_bialternant,
)
from algcomb.tableaux import Partition, count_syt, enumerate_partitions


def small_partitions(max_size):
    out = [Partition(())]
    for n in range(1, max_size + 1):
        out.extend(enumerate_partitions(n))
    return out


def test_schur_poly_trivial_shapes():
    # s_(k) = complete homogeneous, s_(1^k) = elementary.
    e2 = elementary_symmetric(2, 3)
    assert schur_poly((1, 1), 3) == e2
    s2 = schur_poly((2,), 2)
    x, y = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
    assert s2 == x * x + x * y + y * y


def test_schur_matches_bialternant():
    for lam, nv in (
        ((1,), 2),
        ((2,), 2),
        ((2, 1), 3),
        ((3, 1), 3),
        ((2, 2), 4),
        ((2, 1, 1), 4),
    ):
        assert schur_poly(lam, nv) == schur_poly_bialternant(lam, nv)


def test_schur_polys_are_symmetric():
    for lam in small_partitions(5):
        assert is_symmetric(schur_poly(lam, 4))


def test_kostka_triangularity_and_values():
    # K_{lam,lam} = 1; K dominance-triangular.
    for lam in enumerate_partitions(5):
        assert kostka(lam, lam) == 1
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((1, 1, 1), (2, 1)) == 0


def test_kostka_column_sums_count_ssyt():
    # Summing K over shapes with weight (1^n) counts SYT.
    for n in range(1, 6):
        ones = Partition((1,) * n)
        for lam in enumerate_partitions(n):
            assert kostka(lam, ones) == count_syt(lam)


def test_lr_pieri_rule():
    # c_{mu,(k)}^{lam} = 1 iff lam/mu is a horizontal k-strip.
    assert lr_coefficient((2, 1), (2,), (4, 1)) == 1
    assert lr_coefficient((2, 1), (2,), (3, 2)) == 1
    assert lr_coefficient((2, 1), (2,), (2, 2, 1)) == 1
    assert lr_coefficient((2, 1), (2,), (3, 1, 1)) == 1
    assert lr_coefficient((2, 1), (2,), (2, 1, 1, 1)) == 0


def test_lr_known_values():
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((2,), (1, 1), (2, 2)) == 0
    assert lr_coefficient((2,), (1, 1), (3, 1)) == 1
    assert lr_coefficient((2,), (1, 1), (2, 1, 1)) == 1


def test_lr_symmetry_in_lower_indices():
    parts = small_partitions(4)
    for mu in parts:
        for nu in parts:
            for lam in enumerate_partitions(mu.size + nu.size):
                assert lr_coefficient(mu, nu, lam) == lr_coefficient(
                    nu, mu, lam
                )


def test_schur_expand_round_trip():
    p = schur_poly((2, 1), 3) * schur_poly((1,), 3)
    expansion = schur_expand(p)
    assert expansion == {
        Partition((3, 1)): 1,
        Partition((2, 2)): 1,
        Partition((2, 1, 1)): 1,
    }


def test_schur_expand_rejects_asymmetric():
    x = MultiPoly.variable(2, 0)
    with pytest.raises(ValueError):
        schur_expand(x)


@settings(deadline=None, max_examples=25)
@given(
    st.sampled_from(small_partitions(3)),
    st.sampled_from(small_partitions(3)),
)
def test_lr_totals_match_dimension_count(mu, nu):
    # Sum of c * f^lam equals f^mu * f^nu * binomial(|mu|+|nu|, |mu|).
    from math import comb

    total = sum(
        lr_coefficient(mu, nu, lam) * count_syt(lam)
        for lam in enumerate_partitions(mu.size + nu.size)
    )
    want = count_syt(mu) * count_syt(nu) * comb(mu.size + nu.size, mu.size)
    assert total == want
