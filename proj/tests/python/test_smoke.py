"""Smoke tests for the qespy module."""
import math
from fractions import Fraction

import pytest

import qespy


def test_case_listing():
    ids = qespy.case_ids()
    assert "I" in ids and "XII_III" in ids
    assert qespy.case_defaults("XII_I")["mu"] == Fraction(1, 4)


def test_case_one_block_and_spectrum():
    assert qespy.band_matrix("I") == [[0, -2], [-2, 1]]
    assert qespy.characteristic_equation("I") == [-4, -1, 1]
    lo, hi = qespy.eigenvalues("I")
    assert lo == pytest.approx((1 - math.sqrt(17)) / 2)
    assert hi == pytest.approx((1 + math.sqrt(17)) / 2)


def test_rational_parameters():
    coeffs = qespy.characteristic_equation("I", {"b": Fraction(1, 3), "alpha": "1/2"})
    assert coeffs[1] == Fraction(1, 2) - Fraction(2, 3)


def test_sextic_energy_reflection():
    assert qespy.ers_check("VI", {"n": 2})
    assert sorted(qespy.eigenvalues("VI", {"n": 2})) == pytest.approx([-8, 0, 8], abs=1e-9)


def test_oracle_harmonic():
    values, nodes = qespy.oracle(lambda z: z * z, "line", 3, -10.0, 10.0)
    assert values == pytest.approx([1, 3, 5], abs=1e-6)
    assert nodes == [0, 1, 2]


def test_oracle_matches_algebra():
    pairs = qespy.algebraic_eigenpairs("VI")
    values, _ = qespy.solve_case("VI", {}, 4)
    for p in pairs:
        assert min(abs(v - p["energy_full"]) for v in values) < 1e-5


def test_perturbation_second_order():
    eps = qespy.dalgarno_lewis(3, 5, 7, 11, [[0, 1]])
    assert eps == [0, Fraction(-11, 7), Fraction(11, 686)]
    assert qespy.sextic_vanishing_check(1, 6)


def test_lattice_and_families():
    assert qespy.normal_order("a*b") == "b a + 1"
    assert qespy.realize("I", {}, "uniform", delta=Fraction(1, 10)) == qespy.band_matrix("I")
    assert qespy.realize("VI", {"n": 2}, "exponential", q=Fraction(1, 2)) == qespy.band_matrix("VI", {"n": 2})
    assert qespy.family_eigenvalue("hermite", 3, p=1) == 14
    assert qespy.generate_polynomial("legendre", 2) == [Fraction(-1, 3), 0, 1]


def test_errors():
    with pytest.raises(ValueError):
        qespy.band_matrix("XIII")
    with pytest.raises(qespy.DomainError):
        qespy.realize("I", {}, "exponential", q=1)
