"""Truncated multivariate power series in x_1..x_k with WPoly coefficients.

A series is a sparse map from exponent vectors to WPoly values, kept exact up
to per-variable degree caps; any product term exceeding a cap is discarded.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Mapping

from .wpoly import ONE, WPoly

DegreeCaps = tuple[int, ...]
Exponents = tuple[int, ...]


class NonUnitError(ValueError):
    """Raised when inverting a series whose constant term is not +-1."""


def check_caps(caps: Iterable[int]) -> DegreeCaps:
    caps = tuple(int(c) for c in caps)
    if not caps or any(c < 0 for c in caps):
        raise ValueError(f"caps must be a nonempty vector of nonnegative ints, got {caps}")
    return caps


class TruncSeries:
    """Multivariate power series truncated to per-variable exponent caps."""

    __slots__ = ("caps", "terms")

    def __init__(self, caps: Iterable[int], terms: Mapping[Exponents, WPoly] | None = None):
        caps = check_caps(caps)
        k = len(caps)
        clean: dict[Exponents, WPoly] = {}
        if terms:
            for e, p in terms.items():
                e = tuple(e)
                if len(e) != k or any(v < 0 for v in e):
                    raise ValueError(f"bad exponent vector {e} for {k} variables")
                if any(v > c for v, c in zip(e, caps)):
                    raise ValueError(f"exponent vector {e} exceeds caps {caps}")
                if isinstance(p, int):
                    p = WPoly((p,))
                if p:
                    clean[e] = p
        self.caps = caps
        self.terms = clean

    @classmethod
    def zero(cls, caps) -> "TruncSeries":
        return cls(caps)

    @classmethod
    def constant(cls, caps, coeff) -> "TruncSeries":
        caps = check_caps(caps)
        return cls(caps, {(0,) * len(caps): coeff})

    @classmethod
    def one(cls, caps) -> "TruncSeries":
        return cls.constant(caps, ONE)

    @classmethod
    def monomial(cls, caps, exponents, coeff=ONE) -> "TruncSeries":
        return cls(caps, {tuple(exponents): coeff})

    @classmethod
    def variable(cls, caps, index: int) -> "TruncSeries":
        """The series x_{index+1} (0-based index)."""
        caps = check_caps(caps)
        e = tuple(1 if j == index else 0 for j in range(len(caps)))
        return cls(caps, {e: ONE})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> WPoly:
        return self.terms.get((0,) * len(self.caps), WPoly())

    def coeff(self, exponents) -> WPoly:
        """Coefficient of x^exponents; the vector must be within caps."""
        e = tuple(exponents)
        if len(e) != len(self.caps) or any(v < 0 for v in e):
            raise ValueError(f"bad exponent vector {e}")
        if any(v > c for v, c in zip(e, self.caps)):
            raise ValueError(f"exponent vector {e} exceeds caps {self.caps}")
        return self.terms.get(e, WPoly())

    def _check_compatible(self, other: "TruncSeries"):
        if self.caps != other.caps:
            raise ValueError(f"caps mismatch: {self.caps} vs {other.caps}")

    def __eq__(self, other):
        if isinstance(other, (int, WPoly)):
            other = TruncSeries.constant(self.caps, other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.caps == other.caps and self.terms == other.terms

    __hash__ = None

    def __neg__(self):
        return TruncSeries(self.caps, {e: -p for e, p in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, WPoly)):
            other = TruncSeries.constant(self.caps, other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for e, p in other.terms.items():
            cur = out.get(e)
            out[e] = p if cur is None else cur + p
        return TruncSeries(self.caps, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, WPoly)):
            other = TruncSeries.constant(self.caps, other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, WPoly)):
            return TruncSeries(self.caps, {e: p * other for e, p in self.terms.items()})
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_compatible(other)
        caps = self.caps
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Exponents, WPoly] = {}
        bitems = list(b.items())
        for ea, pa in a.items():
            slack = tuple(c - v for c, v in zip(caps, ea))
            for eb, pb in bitems:
                fits = True
                for v, s in zip(eb, slack):
                    if v > s:
                        fits = False
                        break
                if not fits:
                    continue
                e = tuple(x + y for x, y in zip(ea, eb))
                prod = pa * pb
                cur = out.get(e)
                out[e] = prod if cur is None else cur + prod
        return TruncSeries(caps, out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse in the truncated ring.

        Requires a unit constant term (+1, or -1 which is factored out).  The
        inverse b of 1 - u is built coefficient by coefficient from
        b[e] = sum_m u[m] * b[e - m], visiting exponent vectors in graded
        order over the set reachable as sums of support monomials of u; cost
        is O(#reachable * #support) coefficient products, which stays small
        for the sparse denominators this library produces.
        """
        caps = self.caps
        zero_vec = (0,) * len(caps)
        c = self.terms.get(zero_vec)
        if c == ONE:
            pass
        elif c is not None and c == -1:
            return -((-self).inverse())
        else:
            raise NonUnitError(f"constant term must be +-1 to invert, got {c}")
        u_items = [(e, -p) for e, p in self.terms.items() if e != zero_vec]
        b: dict[Exponents, WPoly] = {zero_vec: ONE}
        if not u_items:
            return TruncSeries(caps, b)
        for e in self._reachable_graded(caps, [m for m, _ in u_items]):
            acc = None
            for me, mp in u_items:
                d = tuple(x - y for x, y in zip(e, me))
                if any(v < 0 for v in d):
                    continue
                bd = b.get(d)
                if bd is None:
                    continue
                t = mp * bd
                acc = t if acc is None else acc + t
            if acc is not None and acc:
                b[e] = acc
        return TruncSeries(caps, b)

    @staticmethod
    def _reachable_graded(caps, monomials):
        """Nonzero exponent vectors expressible as capped sums of monomials,
        in increasing total-degree order (ties broken lexicographically)."""
        zero_vec = (0,) * len(caps)
        seen = {zero_vec}
        heap = [(0, zero_vec)]
        while heap:
            tot, e = heapq.heappop(heap)
            if e != zero_vec:
                yield e
            for m in monomials:
                f = tuple(x + y for x, y in zip(e, m))
                if f in seen or any(v > c for v, c in zip(f, caps)):
                    continue
                seen.add(f)
                heapq.heappush(heap, (sum(f), f))

    def truncate(self, new_caps) -> "TruncSeries":
        """Restrict to smaller caps, discarding terms that no longer fit."""
        new_caps = check_caps(new_caps)
        if len(new_caps) != len(self.caps) or any(n > c for n, c in zip(new_caps, self.caps)):
            raise ValueError(f"new caps {new_caps} must be componentwise <= {self.caps}")
        kept = {
            e: p
            for e, p in self.terms.items()
            if all(v <= c for v, c in zip(e, new_caps))
        }
        return TruncSeries(new_caps, kept)

    def map_coeffs(self, fn) -> "TruncSeries":
        """Apply fn to every WPoly coefficient (zero results are dropped)."""
        return TruncSeries(self.caps, {e: fn(p) for e, p in self.terms.items()})

    def __repr__(self):
        items = ", ".join(f"{e}: {p}" for e, p in sorted(self.terms.items()))
        return f"TruncSeries(caps={self.caps}, {{{items}}})"
