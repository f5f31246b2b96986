from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ribbonpd.poly import IntPolynomial, divexact, spectrum

small_polys = st.lists(st.integers(-9, 9), max_size=6).map(IntPolynomial)


def test_normalization():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial([0, 0]).coeffs == ()
    assert not IntPolynomial()
    assert IntPolynomial().degree() == -1


def test_product_example():
    # (2 + 2z) * (1 + 2z) = 2 + 6z + 4z^2
    assert IntPolynomial([2, 2]) * IntPolynomial([1, 2]) == IntPolynomial([2, 6, 4])


def test_shift_scale_example():
    # 4z^2 * (2 + 6z) = 8z^2 + 24z^3
    assert (IntPolynomial([2, 6]) * 4).shifted(2) == IntPolynomial([0, 0, 8, 24])


def test_monomial_power():
    assert IntPolynomial([0, 2]) ** 3 == IntPolynomial.monomial(8, 3)


@given(small_polys, small_polys, small_polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(small_polys, small_polys, st.integers(-3, 3))
def test_product_evaluation(a, b, x):
    assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)


def test_eval_derivatives():
    p = IntPolynomial([2, 6])
    assert p.eval_derivatives(1, 1) == (8, 6)
    w2 = IntPolynomial([2, 10, 4])
    assert w2.eval_derivatives(1, 0) == (16,)
    c5 = IntPolynomial([2, 2**5 - 2])
    assert c5.evaluate(1) == 32
    q = IntPolynomial([1, 2, 3])
    assert q.eval_derivatives(Fraction(1, 2), 2) == (
        Fraction(11, 4),
        Fraction(5),
        Fraction(6),
    )


def test_spectrum():
    assert spectrum(IntPolynomial([0, 4, 0, 4])) == ((1, 3), False)
    assert spectrum(IntPolynomial([2, 0, 2])) == ((0, 2), False)
    assert spectrum(IntPolynomial([2, 6])) == ((0, 1), True)
    assert spectrum(IntPolynomial()) == ((), True)


def test_divexact():
    p = IntPolynomial([2, -2]) * IntPolynomial([1, 2, 3])
    assert divexact(p, IntPolynomial([2, -2])) == IntPolynomial([1, 2, 3])
    with pytest.raises(ValueError):
        divexact(IntPolynomial([1, 1]), IntPolynomial([2, -2]))
    with pytest.raises(ValueError):
        divexact(IntPolynomial([1]), IntPolynomial([2]))  # non-integer quotient


def test_text_forms_are_canonical():
    assert IntPolynomial([2, 30]).to_text() == "2 + 30*z"
    assert IntPolynomial([2, 10, 4]).to_text() == "2 + 10*z + 4*z^2"
    assert IntPolynomial([0, 4, 0, 4]).to_text() == "4*z + 4*z^3"
    assert IntPolynomial([-2, 2]).to_text() == "-2 + 2*z"
    assert IntPolynomial([1, -1]).to_text() == "1 - 1*z"
    assert IntPolynomial().to_text() == "0"
    assert IntPolynomial([2, 6]).to_csv_row() == "1,2,6"


def test_substituted_power():
    assert IntPolynomial([2, 2]).substituted_power(2) == IntPolynomial([2, 0, 2])
