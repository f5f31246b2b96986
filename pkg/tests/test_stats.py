"""Exact distributions, the normal CDF contract, and the KS distance."""

import math
from fractions import Fraction

import mpmath
import pytest

from ribbonpd.families import generate, spec
from ribbonpd.enumeration import genus_polynomial
from ribbonpd.poly import IntPolynomial
from ribbonpd.ribbon import PreconditionError
from ribbonpd.stats import (
    asymptotic_rows,
    ks_to_normal,
    mean_variance,
    necklace_exact_mean,
    necklace_exact_variance,
    normal_cdf,
    rows_to_csv,
    to_distribution,
)


def test_to_distribution():
    d = to_distribution(IntPolynomial([2, 2]), 2)
    assert d.probs == (Fraction(1, 2), Fraction(1, 2))
    d = to_distribution(IntPolynomial([2, 6]), 3)
    assert d.probs == (Fraction(1, 4), Fraction(3, 4))
    point = to_distribution(IntPolynomial([16]), 4)
    assert mean_variance(point) == (0, 0)


def test_to_distribution_rejects_bad_sum():
    with pytest.raises(ValueError):
        to_distribution(IntPolynomial([2, 2]), 3)


def test_necklace_one_moments():
    d = to_distribution(genus_polynomial(generate(spec("necklace", 1))), 3)
    mean, var = mean_variance(d)
    assert mean == Fraction(3, 4) == necklace_exact_mean(1)
    assert var == Fraction(3, 16) == necklace_exact_variance(1)


def test_necklace_exact_moments_sample():
    from ribbonpd.families import genus_closed_form

    for n in (2, 7, 25, 60):
        poly = genus_closed_form(spec("necklace", n))
        d = to_distribution(poly, 3 * n)
        mean, var = mean_variance(d)
        assert mean == necklace_exact_mean(n)
        assert var == necklace_exact_variance(n)


def test_normal_cdf_basics():
    assert normal_cdf(0.0) == 0.5
    assert abs(normal_cdf(1.959964) - 0.975) < 1e-6
    for x in (-3.7, -1.2, 0.4, 2.9):
        assert abs(normal_cdf(-x) - (1.0 - normal_cdf(x))) < 1e-12


def test_normal_cdf_against_numeric_integration():
    # the contractual error bound, checked against direct quadrature of the
    # density at 30 digits
    mpmath.mp.dps = 30
    density = lambda u: mpmath.exp(-u * u / 2) / mpmath.sqrt(2 * mpmath.pi)
    for x in (-6.0, -2.5, -1.0, -0.3, 0.0, 0.7, 1.5, 3.2, 6.0):
        oracle = mpmath.quad(density, [-mpmath.inf, x])
        assert abs(normal_cdf(x) - float(oracle)) <= 1e-7


def test_ks_two_point_hand_value():
    d = to_distribution(IntPolynomial([2, 2]), 2)
    # mass 1/2 at 0 and 1: mean 1/2, sigma 1/2, jumps at t = -1 and 1; the
    # supremum is Phi(1) - 1/2 by symmetry
    expected = normal_cdf(1.0) - 0.5
    assert math.isclose(ks_to_normal(d), expected, rel_tol=1e-12)


def test_ks_binomial_sanity():
    d = to_distribution(IntPolynomial([1, 1]) ** 64, 64)
    assert ks_to_normal(d) <= 0.06


def test_ks_requires_positive_variance():
    with pytest.raises(PreconditionError):
        ks_to_normal(to_distribution(IntPolynomial([4]), 2))


def test_ks_range():
    for n in (1, 3, 9):
        d = to_distribution(genus_polynomial(generate(spec("cycle", n + 1))), n + 1)
        assert 0.0 <= ks_to_normal(d) <= 1.0


def test_fan_golden_mean_at_twelve():
    rows = asymptotic_rows("fan", 12, ns=[12])
    _, mean, _, _ = rows[0]
    # frozen from the first run of the exact recurrence
    assert mean == Fraction(31224263, 4194304)
    assert abs(float(mean) / (2 * 12 / 3) - 1) <= 0.15


def test_asymptotic_rows_csv_shape():
    rows = asymptotic_rows("necklace", 3)
    csv = rows_to_csv(rows)
    lines = csv.strip().split("\n")
    assert lines[0] == "n,mean_num,mean_den,var_num,var_den,ks"
    assert len(lines) == 4
    assert lines[1].split(",")[:5] == ["1", "3", "4", "3", "16"]
    with pytest.raises(ValueError):
        asymptotic_rows("star", 3)
