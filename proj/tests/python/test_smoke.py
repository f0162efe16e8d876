"""Smoke tests for the kmshadow python module."""

import pytest

import kmshadow


def test_version():
    assert kmshadow.__version__ == "0.1.0"


def test_decompose_and_value_round_trip():
    assert kmshadow.decompose(5, 2) == [3, 2]
    assert kmshadow.decompose(0, 3) == [2, 1, 0]
    assert kmshadow.value([3, 2]) == 5
    n = 10**30
    coeffs = kmshadow.decompose(n, 4)
    assert kmshadow.value(coeffs) == n


def test_shadow_functions():
    assert kmshadow.kruskal_macaulay(5, 2) == 3
    assert kmshadow.kruskal_katona(5, 2) == 4
    assert kmshadow.binomial(5, 2) == 10
    assert kmshadow.binomial(1, 2) == 0
    assert kmshadow.is_short(3, 2)
    assert not kmshadow.is_short(4, 2)
    assert not kmshadow.is_short(5, 2)
    assert kmshadow.max_translates(5, 1) == 4


def test_extended_representation():
    assert kmshadow.extended_decompose(5, 2) == [3, 1, 0]
    assert kmshadow.extended_decompose(1, 2) is None


def test_families_and_shadows():
    fm = kmshadow.enumerate_prefix("multiset", 2, 5)
    assert fm == [[1, 1], [2, 1], [2, 2], [3, 1], [3, 2]]
    assert kmshadow.shadow("multiset", 2, fm) == [[1], [2], [3]]
    assert len(kmshadow.shadow("multiset", 2, fm)) == kmshadow.kruskal_macaulay(5, 2)
    fs = kmshadow.enumerate_prefix("set", 2, 3)
    assert fs == [[2, 1], [3, 1], [3, 2]]
    with pytest.raises(ValueError):
        kmshadow.enumerate_prefix("neither", 2, 3)


def test_main_inequality_checks():
    report = kmshadow.check_main_inequality(1, 5, 2)
    assert report["holds"] and report["equality"]
    assert report["lhs"] == 3 and report["rhs"] == 3

    catalog = kmshadow.sweep_main_inequality(1, 6)
    assert catalog["pairs"] == [(2, 1), (4, 1), (4, 2), (5, 2)]
    assert catalog["stats"]["checked"] == 8

    witness = kmshadow.sharpness_witness(2)
    assert witness["holds"]
    assert witness["params"]["n"] == "6"
    assert witness["lhs"] == witness["rhs"] == 4

    with pytest.raises(ValueError):
        kmshadow.check_main_inequality(1, 5, 5)


def test_eckhoff_wegner_is_observational():
    violation = kmshadow.check_eckhoff_wegner(1, 1, 1)
    assert not violation["holds"]
    assert violation["lhs"] == 1 and violation["rhs"] == 2


def test_budget_error_is_raised():
    with pytest.raises(kmshadow.BudgetError):
        kmshadow.sweep_main_inequality(1, 10**7 + 1)


def test_big_integers_cross_the_boundary_exactly():
    n = 12345678901234567890123456789
    coeffs = kmshadow.decompose(n, 3)
    assert kmshadow.value(coeffs) == n
    assert kmshadow.kruskal_macaulay(n, 3) < n
    assert kmshadow.max_translates(n, 3) == n - kmshadow.kruskal_macaulay(n, 3)
