"""The eleven acceptance criteria at their stated scales.

Each test runs one criterion of the verification suite at full scale,
prints its single pass/fail line, and asserts the outcome. The heavy
sweeps (criteria 1, 4, 10) dominate the runtime of the whole test
session; bounds and tolerances are the stated ones, not reduced.
"""

import pytest

from algcomb import verify


def _check(fn):
    result = fn("full")
    print(result.line())
    assert result.passed, result.line()


def test_criterion_01_lr_dual_agreement():
    _check(verify.criterion_1)


def test_criterion_02_saturation_scan():
    _check(verify.criterion_2)


def test_criterion_03_horn_lr_equivalence():
    _check(verify.criterion_3)


def test_criterion_04_hall_polynomials():
    _check(verify.criterion_4)


def test_criterion_05_coinvariant_algebra():
    _check(verify.criterion_5)


def test_criterion_06_nfact_theorem():
    _check(verify.criterion_6)


def test_criterion_07_diagonal_coinvariants():
    _check(verify.criterion_7)


def test_criterion_08_lis_exact_layer():
    _check(verify.criterion_8)


def test_criterion_09_tracy_widom_constants():
    _check(verify.criterion_9)


def test_criterion_10_monte_carlo_bridge():
    _check(verify.criterion_10)


def test_criterion_11_property_suites():
    _check(verify.criterion_11)
