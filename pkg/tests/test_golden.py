from fractions import Fraction

import pytest
from hypothesis import given, settings

from qdimcert.golden import ONE, PHI, ZERO, GoldenNum

from .conftest import goldens, nonzero_goldens


def test_phi_squared():
    assert PHI * PHI == GoldenNum(1, 1)


def test_phi_minus_one_is_inverse():
    assert (PHI - 1) * PHI == ONE
    assert PHI.inverse() == PHI - 1


def test_expansion_example():
    # (1 + 2phi)(2 - phi) = 2 + 3phi - 2phi^2 = phi
    assert GoldenNum(1, 2) * GoldenNum(2, -1) == PHI


@pytest.mark.parametrize("value, inverse", [
    (PHI, GoldenNum(-1, 1)),
    (GoldenNum(2), GoldenNum(Fraction(1, 2))),
    (GoldenNum(1, 1), GoldenNum(2, -1)),  # 1 + phi = phi^2
])
def test_inverse_examples(value, inverse):
    assert value.inverse() == inverse
    assert value * inverse == ONE


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_canonical_form():
    g = GoldenNum(Fraction(4, -6), Fraction(3, 9))
    assert g.a == Fraction(-2, 3) and g.a.denominator == 3
    assert str(g) == "-2/3 + 1/3*phi"
    assert GoldenNum.parse(str(g)) == g


@pytest.mark.parametrize("g, sign", [
    (PHI, 1), (PHI - 2, -1), (GoldenNum(-1, 1), 1), (GoldenNum(2, -1), 1),
    (GoldenNum(-8, 5), 1), (GoldenNum(-9, 5), -1), (GoldenNum(8, -5), -1), (ZERO, 0),
])
def test_sign_in_real_embedding(g, sign):
    assert g.sign() == sign


@settings(max_examples=250)
@given(goldens, goldens, goldens)
def test_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO


@settings(max_examples=250)
@given(nonzero_goldens)
def test_inverse_property(a):
    assert a * a.inverse() == ONE


@settings(max_examples=250)
@given(goldens, goldens)
def test_galois_conjugation_is_a_ring_map(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()


@settings(max_examples=200)
@given(goldens)
def test_field_norm_is_product_with_conjugate(a):
    assert a * a.conjugate() == GoldenNum(a.field_norm())
