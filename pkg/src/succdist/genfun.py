"""Generating functions for counts of increasing successions.

The system generating function G_k (and its auxiliary companion H_k) is built
from per-integer generating functions g_i(x_i) along two independent routes:

* recursive: G_k, H_k from G_{k-1}, H_{k-1} via
  G_k = G_{k-1} + g_k (1 + G_{k-1})(1 + H_{k-1}) / (1 - g_k H_{k-1}),
  H_k = G_{k-1} + g_k (w + G_{k-1})(1 + H_{k-1}) / (1 - g_k H_{k-1}),
  with G_1 = g_1 and H_1 = w g_1;

* explicit: G_k = 1 / (1 - sum_{i=1..k} sum_{l=0..i-1} (w-1)^l f_{i-l}..f_i) - 1
  with f_i = g_i / (1 + g_i), and H_k with numerator
  sum_{l=0..k} (w-1)^l f_{k-l+1}..f_k over the same denominator, minus 1.

The succession polynomial P(w) of a multiplicity vector n is the coefficient
of x^n in G_k with unrestricted g_i = x_i/(1-x_i), for which f_i = x_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .series import DegreeCaps, TruncSeries, check_caps
from .wpoly import ONE, W, WPoly

W_MINUS_1 = WPoly((-1, 1))


@dataclass(frozen=True)
class GenFunInput:
    """Per-integer generating functions g_1..g_k over a shared truncation.

    Each g_i must have zero constant term and involve only variable i.
    """

    k: int
    g: tuple[TruncSeries, ...]
    caps: DegreeCaps

    def __post_init__(self):
        object.__setattr__(self, "g", tuple(self.g))
        object.__setattr__(self, "caps", check_caps(self.caps))
        if self.k < 1 or len(self.g) != self.k or len(self.caps) != self.k:
            raise ValueError(f"need k >= 1 series and caps of length k, got k={self.k}")
        for i, gi in enumerate(self.g):
            if gi.caps != self.caps:
                raise ValueError(f"g_{i + 1} caps {gi.caps} differ from {self.caps}")
            if gi.constant_term():
                raise ValueError(f"g_{i + 1} must have zero constant term")
            for e in gi.terms:
                if any(v != 0 for j, v in enumerate(e) if j != i):
                    raise ValueError(f"g_{i + 1} involves a variable other than x_{i + 1}")


@dataclass(frozen=True)
class GHPair:
    """The system generating function G and its auxiliary companion H."""

    G: TruncSeries
    H: TruncSeries


def unrestricted_input(caps) -> GenFunInput:
    """g_i = x_i + x_i^2 + ... (x_i/(1-x_i) truncated): no count restrictions."""
    caps = check_caps(caps)
    k = len(caps)
    g = []
    for i in range(k):
        terms = {}
        for d in range(1, caps[i] + 1):
            terms[tuple(d if j == i else 0 for j in range(k))] = ONE
        g.append(TruncSeries(caps, terms))
    return GenFunInput(k=k, g=tuple(g), caps=caps)


def build_gh_recursive(inp: GenFunInput) -> GHPair:
    """Build G_k and H_k by iterating the two-function recurrence from k=1."""
    one = TruncSeries.one(inp.caps)
    w = TruncSeries.constant(inp.caps, W)
    G = inp.g[0]
    H = inp.g[0] * W
    for i in range(1, inp.k):
        gi = inp.g[i]
        denom_inv = (one - gi * H).inverse()
        common = gi * (one + H) * denom_inv
        G_next = G + (one + G) * common
        H_next = G + (w + G) * common
        G, H = G_next, H_next
    return GHPair(G=G, H=H)


def _f_from_g(inp: GenFunInput) -> list[TruncSeries]:
    """f_i = g_i / (1 + g_i); stays a series in x_i alone."""
    one = TruncSeries.one(inp.caps)
    return [gi * (one + gi).inverse() for gi in inp.g]


def succession_denominator(f: Sequence[TruncSeries], caps) -> TruncSeries:
    """1 - sum_{i=1..k} sum_{l=0..i-1} (w-1)^l * f_{i-l} * ... * f_i.

    This is the common denominator of G_k and H_k, and also the bracketed
    factor of the determinant of the transfer matrix.
    """
    caps = check_caps(caps)
    total = TruncSeries.one(caps)
    for i in range(len(f)):
        prod = f[i]
        wm1_power = ONE
        total = total - prod * wm1_power
        for l in range(1, i + 1):
            prod = prod * f[i - l]
            if prod.is_zero:
                break
            wm1_power = wm1_power * W_MINUS_1
            total = total - prod * wm1_power
    return total


def build_gh_explicit(inp: GenFunInput) -> GHPair:
    """Build G_k and H_k from the closed formula in terms of f_i = g_i/(1+g_i)."""
    f = _f_from_g(inp)
    denom_inv = succession_denominator(f, inp.caps).inverse()
    one = TruncSeries.one(inp.caps)
    # H numerator: sum_{l=0..k} (w-1)^l f_{k-l+1} .. f_k  (empty product = 1)
    num = TruncSeries.one(inp.caps)
    prod = TruncSeries.one(inp.caps)
    wm1_power = ONE
    for l in range(1, inp.k + 1):
        prod = prod * f[inp.k - l]
        if prod.is_zero:
            break
        wm1_power = wm1_power * W_MINUS_1
        num = num + prod * wm1_power
    return GHPair(G=denom_inv - one, H=num * denom_inv - one)


def unrestricted_denominator(caps) -> TruncSeries:
    """Denominator of G_k for unrestricted counts, where f_i = x_i exactly:
    each term is (w-1)^l times the product of a window of consecutive
    variables x_{i-l}..x_i."""
    caps = check_caps(caps)
    k = len(caps)
    terms = {(0,) * k: ONE}
    wm1_powers = [ONE]
    for _ in range(k - 1):
        wm1_powers.append(wm1_powers[-1] * W_MINUS_1)
    for i in range(k):
        for l in range(i + 1):
            if any(caps[j] < 1 for j in range(i - l, i + 1)):
                continue
            vec = tuple(1 if i - l <= j <= i else 0 for j in range(k))
            terms[vec] = -wm1_powers[l]
    return TruncSeries(caps, terms)


def _validated_multiplicities(multiplicities) -> tuple[int, ...]:
    n = tuple(int(v) for v in multiplicities)
    if not n:
        raise ValueError("multiplicity vector must be nonempty")
    if any(v < 0 for v in n):
        raise ValueError(f"multiplicities must be nonnegative, got {n}")
    if sum(n) < 1:
        raise ValueError("at least one multiplicity must be positive")
    return n


def succession_polynomial(multiplicities: Sequence[int]) -> WPoly:
    """Exact succession polynomial P(w) = sum_r s(r) w^r for the multiset with
    the given multiplicity vector: coefficient r counts the arrangements with
    exactly r adjacent pairs increasing by one."""
    n = _validated_multiplicities(multiplicities)
    inv = unrestricted_denominator(n).inverse()
    return inv.coeff(n)


def succession_polynomial_restricted(inp: GenFunInput, exponents: Sequence[int]) -> WPoly:
    """Coefficient of x^exponents in G_k for caller-supplied g_i, e.g. finite
    polynomials bounding how many copies of an integer may appear."""
    n = tuple(int(v) for v in exponents)
    if len(n) != inp.k or any(v < 0 for v in n):
        raise ValueError(f"bad exponent vector {n}")
    if any(v > c for v, c in zip(n, inp.caps)):
        raise ValueError(f"exponent vector {n} exceeds caps {inp.caps}")
    f = _f_from_g(inp)
    inv = succession_denominator(f, inp.caps).inverse()
    G = inv - TruncSeries.one(inp.caps)
    return G.coeff(n)
