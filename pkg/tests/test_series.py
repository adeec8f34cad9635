"""Truncated series arithmetic and its role as the Bernoulli oracle."""

import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bernkit.bernoulli import bernoulli_number, bernoulli_polynomial, BernoulliCache
from bernkit.series import TruncatedSeries, bernoulli_series_at, series_exp

rationals = st.fractions(min_value=-8, max_value=8, max_denominator=10)


def one(order):
    return TruncatedSeries([1] + [0] * order)


# ------------------------------------------------------------ construction


def test_series_keeps_trailing_zeros():
    s = TruncatedSeries([1, 0, 0])
    assert s.order == 2
    assert s.coeffs == (F(1), F(0), F(0))


def test_series_rejects_empty_and_floats():
    with pytest.raises(ValueError):
        TruncatedSeries([])
    with pytest.raises(TypeError):
        TruncatedSeries([0.5])


# -------------------------------------------------------------------- exp


def test_series_exp_examples():
    assert series_exp(0, 4) == TruncatedSeries([1, 0, 0, 0, 0])
    assert series_exp(1, 3) == TruncatedSeries([1, 1, F(1, 2), F(1, 6)])
    assert series_exp(F(1, 2), 2) == TruncatedSeries([1, F(1, 2), F(1, 8)])


def test_series_exp_coefficients_are_powers_over_factorials():
    a = F(2, 3)
    s = series_exp(a, 10)
    for i, c in enumerate(s.coeffs):
        assert c == a**i / math.factorial(i)


def test_series_exp_rejects_negative_order():
    with pytest.raises(ValueError):
        series_exp(1, -1)


# ------------------------------------------------------------------- mul


def test_series_mul_examples():
    s = TruncatedSeries([3, F(1, 2), -2])
    assert one(2) * s == s
    z = TruncatedSeries([0, 1, 0, 0])
    assert z * z == TruncatedSeries([0, 0, 1, 0])
    ez = series_exp(1, 6)
    emz = series_exp(-1, 6)
    assert ez * emz == one(6)


def test_series_mul_order_mismatch():
    with pytest.raises(ValueError):
        one(3) * one(4)


# ------------------------------------------------------------------- div


def test_series_div_examples():
    s = TruncatedSeries([2, -1, F(1, 3)])
    assert s / one(2) == s
    inv_exp = one(4) / series_exp(1, 4)
    assert inv_exp == TruncatedSeries([1, -1, F(1, 2), F(-1, 6), F(1, 24)])
    geometric = one(3) / TruncatedSeries([1, -1, 0, 0])
    assert geometric == TruncatedSeries([1, 1, 1, 1])


def test_series_div_rejects_non_unit():
    with pytest.raises(ZeroDivisionError):
        one(2) / TruncatedSeries([0, 1, 0])


def test_series_div_order_mismatch():
    with pytest.raises(ValueError):
        one(2) / one(3)


@given(
    st.lists(rationals, min_size=5, max_size=5),
    st.lists(rationals, min_size=4, max_size=4),
    rationals.filter(bool),
)
def test_div_then_mul_round_trips(a_coeffs, b_tail, b_head):
    a = TruncatedSeries(a_coeffs)
    b = TruncatedSeries([b_head] + b_tail)
    assert (a / b) * b == a


# -------------------------------------------------------- negate argument


def test_negate_argument():
    even = TruncatedSeries([1, 0, F(1, 2), 0])
    assert even.negate_argument() == even
    assert TruncatedSeries([0, 1, 0, 0]).negate_argument() == TruncatedSeries(
        [0, -1, 0, 0]
    )


@given(st.lists(rationals, min_size=1, max_size=9))
def test_negate_argument_is_involution(coeffs):
    s = TruncatedSeries(coeffs)
    assert s.negate_argument().negate_argument() == s


# ------------------------------------------------- Bernoulli series oracle


def test_bernoulli_series_constant_term():
    assert bernoulli_series_at(0, 6).coeffs[0] == 1


def test_bernoulli_series_matches_recurrence():
    s = bernoulli_series_at(0, 32)
    for n in range(33):
        assert math.factorial(n) * s.coeffs[n] == bernoulli_number(n, "recurrence")


def test_bernoulli_series_matches_polynomial_values():
    cache = BernoulliCache().extend(40)
    points = [F(0), F(1, 2), F(1), F(-1), F(1, 3)]
    for x0 in points:
        s = bernoulli_series_at(x0, 40)
        for n in range(41):
            poly_value = bernoulli_polynomial(n, cache)(x0)
            assert math.factorial(n) * s.coeffs[n] == poly_value


def test_midpoint_series_is_even():
    s = bernoulli_series_at(F(1, 2), 64)
    assert s.negate_argument() == s
    assert all(s.coeffs[n] == 0 for n in range(1, 65, 2))
