"""Kernel tests: WPoly ring arithmetic and exact rationals."""

from fractions import Fraction
from math import gcd

from hypothesis import given
from hypothesis import strategies as st

import pytest

from succdist.wpoly import ONE, W, WPoly, ZERO, Rational

wpolys = st.builds(WPoly, st.lists(st.integers(-30, 30), max_size=6))
rationals = st.fractions(min_value=-100, max_value=100)


def test_add_examples():
    assert ONE + W + W == WPoly((1, 2))
    p = WPoly((3, 0, 5))
    assert p + ZERO == p
    q = WPoly((7, 12, 9, 2))
    assert q + (-q) == ZERO


def test_mul_examples():
    assert (ONE + W) * (ONE - W) == WPoly((1, 0, -1))
    p = WPoly((4, -1, 2))
    assert p * ONE == p
    sq = (ONE + W) * (ONE + W)
    assert sq(1) == 4 == (ONE + W)(1) ** 2


def test_canonical_form():
    assert WPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert WPoly((0, 0)).coeffs == ()
    assert not WPoly(())
    assert WPoly((0, 1)) == W


def test_degree():
    assert ZERO.degree == -1
    assert ONE.degree == 0
    assert WPoly((7, 12, 9, 2)).degree == 3


@given(wpolys, wpolys)
def test_degree_multiplicative(p, q):
    if p and q:
        assert (p * q).degree == p.degree + q.degree


def test_derivative_examples():
    p = WPoly((7, 12, 9, 2))
    assert p.derivative() == WPoly((12, 18, 6))
    assert p.derivative()(1) == 36
    assert p.derivative(0) == p
    assert WPoly((5,)).derivative() == ZERO
    assert p.derivative(3) == WPoly((12,))
    with pytest.raises(ValueError):
        p.derivative(-1)


def test_eval_examples():
    p = WPoly((7, 12, 9, 2))
    assert p(1) == 30
    assert p(0) == 7
    assert (ONE + W)(Fraction(1, 2)) == Fraction(3, 2)
    assert ZERO(Fraction(5, 3)) == 0


@given(wpolys, wpolys, wpolys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(wpolys, wpolys, rationals)
def test_eval_is_ring_homomorphism(p, q, v):
    assert (p * q)(v) == p(v) * q(v)
    assert (p + q)(v) == p(v) + q(v)


@given(wpolys, st.integers(0, 4))
def test_pow_matches_repeated_mul(p, e):
    expected = ONE
    for _ in range(e):
        expected = expected * p
    assert p**e == expected


def test_int_coercion_and_hash():
    assert WPoly((5,)) == 5
    assert hash(WPoly((5,))) == hash(5)
    assert hash(ZERO) == hash(0)
    assert WPoly((5, 1)) != 5
    assert 2 * W == WPoly((0, 2))
    assert 1 - W == WPoly((1, -1))


@given(rationals, rationals)
def test_rational_canonical_closure(a, b):
    for value in (a + b, a - b, a * b) + ((a / b,) if b else ()):
        assert isinstance(value, Rational)
        assert value.denominator > 0
        assert gcd(abs(value.numerator), value.denominator) == 1
