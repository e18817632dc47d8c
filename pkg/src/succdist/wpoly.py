"""Exact arithmetic kernel: integer polynomials in the succession marker w.

Rationals are stdlib ``fractions.Fraction`` (re-exported as ``Rational``):
always reduced, denominator positive.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


class WPoly:
    """Dense polynomial in the marker variable w, coefficients are Python ints.

    Canonical form: no trailing zero coefficient; the zero polynomial is the
    empty tuple.  Instances are immutable; all operations return new values.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, c: int) -> "WPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree in w; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = WPoly((other,))
        if not isinstance(other, WPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        # degree-0 polynomials hash like the bare int so p == n implies equal hashes
        if len(self.coeffs) < 2:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __neg__(self):
        return WPoly(-c for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = WPoly((other,))
        if not isinstance(other, WPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return WPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = WPoly((other,))
        if not isinstance(other, WPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0 or not self.coeffs:
                return ZERO
            if other == 1:
                return self
            return WPoly(c * other for c in self.coeffs)
        if not isinstance(other, WPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(b) == 1:
            b0 = b[0]
            return WPoly(c * b0 for c in a)
        if len(a) == 1:
            a0 = a[0]
            return WPoly(a0 * c for c in b)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return WPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "WPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self, m: int = 1) -> "WPoly":
        """m-th formal derivative with respect to w."""
        if m < 0:
            raise ValueError("derivative order must be nonnegative")
        if m == 0:
            return self
        return WPoly(math.perm(i, m) * c for i, c in enumerate(self.coeffs) if i >= m)

    def __call__(self, v):
        """Evaluate at v by Horner's rule; exact for int and Fraction inputs."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def __repr__(self):
        return f"WPoly({self.coeffs!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*w" if c != 1 else "w")
            else:
                parts.append(f"{c}*w^{i}" if c != 1 else f"w^{i}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = WPoly()
ONE = WPoly((1,))
W = WPoly((0, 1))
