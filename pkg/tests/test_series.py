"""Exact series arithmetic: frozen examples plus ring-law properties."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussrank import TruncatedSeries, ZeroConstantTerm, as_rational, rational

S = TruncatedSeries


def series(coeffs, prec):
    return S([rational(c) if not isinstance(c, tuple) else rational(*c) for c in coeffs], prec)


# -- frozen examples ---------------------------------------------------


def test_mul_difference_of_squares():
    a = series([1, 1], 3)
    b = series([1, -1], 3)
    assert a * b == series([1, 0, -1], 3)


def test_mul_identity():
    s = series([3, (1, 2), 0, 5], 4)
    assert S.one(4) * s == s
    assert s * S.one(4) == s


def test_mul_leading_quartic_square():
    # (y^4/288)^2 = y^8/82944, truncated at order 10
    s = S.monomial(4, 10, rational(1, 288))
    sq = s * s
    assert sq == S.monomial(8, 10, rational(1, 82944))


def test_mul_truncates_to_min_precision():
    a = series([1, 1, 1, 1, 1], 5)
    b = series([1, 1], 3)
    assert (a * b).precision == 3
    assert (a + b).precision == 3


def test_inverse_of_one():
    assert S.one(5).inverse() == S.one(5)


def test_inverse_geometric():
    s = series([1, -1], 4)
    assert s.inverse() == series([1, 1, 1, 1], 4)


def test_inverse_affine():
    s = series([2, 3], 3)
    inv = s.inverse()
    assert inv == series([(1, 2), (-3, 4), (9, 8)], 3)
    assert s * inv == S.one(3)


def test_inverse_requires_unit():
    with pytest.raises(ZeroConstantTerm):
        S.monomial(1, 4).inverse()


def test_pow_square():
    assert series([1, 1], 3) ** 2 == series([1, 2, 1], 3)


def test_pow_zero_is_one():
    s = series([7, -2, 3], 6)
    assert s ** 0 == S.one(6)


def test_pow_cube():
    assert series([-2, 1], 4) ** 3 == series([-8, 12, -6, 1], 4)


def test_derivative_of_constant():
    assert series([5], 4).derivative() == S.zero(3)


def test_derivative_of_monomial():
    assert S.monomial(3, 5).derivative() == S.monomial(2, 4, 3)


def test_derivative_termwise():
    b = rational(5, 7)
    s = S.monomial(4, 10, rational(1, 288)) + S.monomial(8, 10, b)
    expected = S.monomial(3, 9, rational(1, 72)) + S.monomial(7, 9, 8 * b)
    assert s.derivative() == expected


def test_derivative_drops_precision():
    assert series([1, 2, 3], 3).derivative().precision == 2


def test_vanishing_order():
    s = S.monomial(2, 8, 3) + S.monomial(5, 8)
    assert s.vanishing_order() == 2
    assert S.zero(8).vanishing_order() is None
    assert S.zero(8).is_zero()


def test_shifted():
    s = series([1, 2, 3], 3)
    assert s.shifted(1) == series([0, 1, 2], 3)
    assert s.shifted(0) is s


def test_scalar_multiplication():
    s = series([1, 2], 3)
    assert 2 * s == series([2, 4], 3)
    assert s * rational(1, 2) == series([(1, 2), 1], 3)


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        series([0.5], 3)
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_rational_coercion():
    assert as_rational("3/4") == rational(3, 4)
    assert as_rational(7) == rational(7)
    q = rational(6, 4)
    assert q.numerator == 3 and q.denominator == 2


# -- randomized properties ---------------------------------------------

rationals = st.builds(rational, st.integers(-9, 9), st.integers(1, 9))
coeff_lists = st.lists(rationals, min_size=0, max_size=7)
precisions = st.integers(2, 7)


@st.composite
def any_series(draw):
    return S(draw(coeff_lists), draw(precisions))


@st.composite
def unit_series(draw):
    head = draw(st.builds(rational, st.integers(1, 9), st.integers(1, 9)))
    sign = draw(st.sampled_from([1, -1]))
    return S([sign * head] + draw(coeff_lists), draw(precisions))


@settings(max_examples=150, deadline=None)
@given(any_series(), any_series(), any_series())
def test_ring_laws(a, b, c):
    n = min(a.precision, b.precision, c.precision)
    a, b, c = a.truncated(n), b.truncated(n), c.truncated(n)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert (a - b) + b == a


@settings(max_examples=150, deadline=None)
@given(unit_series())
def test_inverse_roundtrip(a):
    assert a * a.inverse() == S.one(a.precision)
    assert a.inverse().inverse() == a


@settings(max_examples=150, deadline=None)
@given(any_series(), any_series())
def test_leibniz(a, b):
    n = min(a.precision, b.precision)
    lhs = (a * b).derivative()
    rhs = a.derivative() * b.truncated(n) + a.truncated(n) * b.derivative()
    assert lhs == rhs


@settings(max_examples=150, deadline=None)
@given(any_series(), any_series())
def test_vanishing_order_additivity(a, b):
    n = min(a.precision, b.precision)
    oa, ob = a.vanishing_order(), b.vanishing_order()
    if oa is None or ob is None:
        assert (a * b).is_zero()
    elif oa < n / 2 and ob < n / 2:
        assert (a * b).vanishing_order() == oa + ob


@settings(max_examples=100, deadline=None)
@given(any_series(), st.integers(0, 4))
def test_pow_matches_repeated_mul(a, e):
    expected = S.one(a.precision)
    for _ in range(e):
        expected = expected * a
    assert a ** e == expected
