from fractions import Fraction

import pytest

from algcomb.saturation import (
    hermitian_feasible_integer,
    horn_feasible,
    horn_lr_agreement,
    horn_system,
    saturation_scan,
)


def test_horn_system_sizes():
    assert len(horn_system(2).inequalities) == 3
    assert len(horn_system(3).inequalities) == 12
    with pytest.raises(ValueError):
        horn_system(4)


def test_horn_feasible_trace_condition():
    # Trace must balance: gamma sums to alpha + beta sums.
    assert horn_feasible((1, 0), (1, 0), (2, 0))
    assert not horn_feasible((1, 0), (1, 0), (3, 0))


def test_horn_feasible_weyl_inequality():
    # gamma_1 <= alpha_1 + beta_1 is one of the n=2 inequalities.
    assert not horn_feasible((1, 1), (1, 1), (4, 0))
    assert horn_feasible((1, 1), (1, 1), (2, 2))


def test_horn_accepts_rational_spectra():
    a = (Fraction(3, 2), Fraction(1, 2))
    assert horn_feasible(a, a, (2, 2))
    assert not horn_feasible(a, a, (Fraction(7, 2), Fraction(1, 2)))


def test_horn_requires_sorted_input():
    with pytest.raises(ValueError):
        horn_feasible((0, 1), (1, 0), (1, 1))


def test_lr_equivalence_examples():
    assert hermitian_feasible_integer((2, 1), (1,), (2, 2))
    assert not hermitian_feasible_integer((2,), (1, 1), (2, 2))


def test_horn_lr_agreement_small():
    agree2, dis2 = horn_lr_agreement(2, 4)
    assert not dis2 and agree2 > 0
    agree3, dis3 = horn_lr_agreement(3, 3)
    assert not dis3 and agree3 > 0


def test_saturation_scan_small():
    report = saturation_scan(4, 3)
    assert report["violations"] == []
    assert report["checked"] > 0
