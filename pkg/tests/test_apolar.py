import math

import pytest

from algcomb.apolar import (
    coinvariant_span,
    derivative_span,
    gh_determinant,
    gh_span,
    graded_character,
    irreducible_multiplicities,
    vandermonde,
)
from algcomb.multipoly import MultiPoly
from algcomb.tableaux import (
    Partition,
    diagram_coords,
    enumerate_partitions,
    maj_multiplicity,
    q_factorial,
)


def test_derivative_span_of_binomial_square():
    # (x + y)^2 spans {(x+y)^2, x+y, 1}: dimension 3.
    x, y = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
    span = derivative_span((x + y) * (x + y))
    assert span.dimension == 3
    assert span.graded_dimensions() == {0: 1, 1: 1, 2: 1}


def test_derivative_span_of_monomial():
    x = MultiPoly.variable(1, 0)
    span = derivative_span(x * x * x)
    assert span.dimension == 4


def test_coinvariant_dimensions():
    for n in range(1, 6):
        assert coinvariant_span(n).dimension == math.factorial(n)


def test_coinvariant_graded_dimensions_are_q_factorial():
    for n in range(1, 6):
        graded = coinvariant_span(n).graded_dimensions()
        for i, c in enumerate(q_factorial(n).coeffs):
            assert graded.get(i, 0) == c


def test_regular_character():
    n = 4
    table = graded_character(coinvariant_span(n), n)
    assert table.total_trace(Partition((1, 1, 1, 1))) == 24
    assert table.total_trace(Partition((2, 1, 1))) == 0
    assert table.total_trace(Partition((4,))) == 0


def test_maj_theorem_small():
    for n in range(2, 5):
        table = graded_character(coinvariant_span(n), n)
        mults = irreducible_multiplicities(table)
        for (bd, lam), m in mults.items():
            assert m == maj_multiplicity(lam, bd[0])


def test_gh_determinant_vandermonde_case():
    # mu = (1,1,...,1) gives cells (i, 0): the classical Vandermonde in x.
    mu = Partition((1, 1, 1))
    det = gh_determinant(diagram_coords(mu), 3)
    v = vandermonde(3, nvars=6)
    assert det == v or det == v * (-1)


def test_gh_determinant_rejects_repeats():
    with pytest.raises(ValueError):
        gh_determinant([(0, 0), (0, 0)], 2)


def test_nfact_theorem_n_le_4():
    for n in range(1, 5):
        for mu in enumerate_partitions(n):
            assert gh_span(mu).dimension == math.factorial(n)


def test_gh_span_conjugate_symmetry():
    # Transposing the shape swaps the x and y gradings.
    mu = Partition((2, 1))
    dims = gh_span(mu).bigraded_dimensions()
    dims_conj = gh_span(mu.conjugate()).bigraded_dimensions()
    assert dims_conj == {(j, i): d for (i, j), d in dims.items()}
