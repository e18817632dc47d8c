"""Truncated-series ring tests: arithmetic, inversion, coefficient access."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from succdist.series import NonUnitError, TruncSeries
from succdist.wpoly import ONE, W, WPoly


def x(caps, i):
    return TruncSeries.variable(caps, i)


def test_add_examples():
    caps = (1, 1)
    s = x(caps, 0) + x(caps, 1)
    assert len(s.terms) == 2
    assert s + TruncSeries.zero(caps) == s
    assert x(caps, 0) + (-x(caps, 0)) == TruncSeries.zero(caps)


def test_mul_examples():
    caps = (1, 1)
    prod = x(caps, 0) * x(caps, 1)
    assert prod.coeff((1, 1)) == ONE
    assert x(caps, 0) * x(caps, 0) == TruncSeries.zero(caps)  # truncated away
    caps1 = (2,)
    one = TruncSeries.one(caps1)
    assert (one + x(caps1, 0)) * (one - x(caps1, 0)) == TruncSeries(
        caps1, {(0,): ONE, (2,): -ONE}
    )


def test_caps_mismatch_rejected():
    with pytest.raises(ValueError):
        x((1,), 0) + x((2,), 0)
    with pytest.raises(ValueError):
        x((1, 1), 0) * x((1, 2), 0)


def test_inverse_geometric():
    caps = (3,)
    inv = (TruncSeries.one(caps) - x(caps, 0)).inverse()
    assert inv == TruncSeries(caps, {(0,): ONE, (1,): ONE, (2,): ONE, (3,): ONE})


def test_inverse_of_one():
    assert TruncSeries.one((2, 2)).inverse() == TruncSeries.one((2, 2))


def test_inverse_two_variable_marked():
    # denominator of the two-integer system; the (1,1) coefficient counts the
    # two arrangements of {1,2}: "12" has one succession, "21" has none
    caps = (1, 1)
    den = TruncSeries(
        caps,
        {(0, 0): ONE, (1, 0): -ONE, (0, 1): -ONE, (1, 1): -(W - 1)},
    )
    assert den.inverse().coeff((1, 1)) == ONE + W


def test_inverse_negative_unit():
    caps = (2,)
    a = -(TruncSeries.one(caps) - x(caps, 0))
    assert a * a.inverse() == TruncSeries.one(caps)


def test_inverse_requires_unit():
    caps = (2,)
    with pytest.raises(NonUnitError):
        x(caps, 0).inverse()
    with pytest.raises(NonUnitError):
        (TruncSeries.constant(caps, 2) + x(caps, 0)).inverse()
    with pytest.raises(NonUnitError):
        (TruncSeries.constant(caps, W) + x(caps, 0)).inverse()


def test_three_variable_displayed_denominator():
    # 1 - x1 - x2 - x3 + x1x2 + x2x3 - x1x2x3 - x1x2 w - x2x3 w
    #   + 2 x1x2x3 w - x1x2x3 w^2, inverted and read at (1, 2, 2)
    caps = (1, 2, 2)
    den = TruncSeries(
        caps,
        {
            (0, 0, 0): ONE,
            (1, 0, 0): -ONE,
            (0, 1, 0): -ONE,
            (0, 0, 1): -ONE,
            (1, 1, 0): ONE - W,
            (0, 1, 1): ONE - W,
            (1, 1, 1): WPoly((-1, 2, -1)),
        },
    )
    assert den.inverse().coeff((1, 2, 2)) == WPoly((7, 12, 9, 2))
    assert den.inverse().coeff((0, 0, 0)) == ONE  # the constant the -1 removes


def test_coeff_bounds():
    caps = (1, 1)
    s = x(caps, 0) * x(caps, 1)
    assert s.coeff((1, 0)) == WPoly()
    with pytest.raises(ValueError):
        s.coeff((2, 0))
    with pytest.raises(ValueError):
        s.coeff((1,))


def test_scalar_mul_and_constant_term():
    caps = (2,)
    s = (TruncSeries.one(caps) + x(caps, 0)) * W
    assert s.coeff((0,)) == W
    assert s.constant_term() == W
    assert (s * 0).is_zero


exponents = st.tuples(st.integers(0, 2), st.integers(0, 2))
unit_series = st.dictionaries(exponents, st.builds(WPoly, st.lists(st.integers(-4, 4), max_size=3)), max_size=6).map(
    lambda terms: TruncSeries((2, 2), {**terms, (0, 0): ONE})
)


@given(unit_series)
@settings(max_examples=60)
def test_inverse_is_two_sided(a):
    one = TruncSeries.one((2, 2))
    b = a.inverse()
    assert a * b == one
    assert b * a == one


@given(unit_series, unit_series)
@settings(max_examples=40)
def test_truncation_consistency(a, b):
    # multiply at caps (2,2) then truncate == truncate operands then multiply
    small = (1, 2)
    assert (a * b).truncate(small) == a.truncate(small) * b.truncate(small)
    assert a.inverse().truncate(small) == a.truncate(small).inverse()


def test_truncate_validates():
    s = TruncSeries.one((2, 2))
    with pytest.raises(ValueError):
        s.truncate((3, 2))
    with pytest.raises(ValueError):
        s.truncate((2,))
