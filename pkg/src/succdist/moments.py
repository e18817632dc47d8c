"""Exact moments of the succession count: closed forms for mean, variance and
the second factorial moment, polynomial differentiation, and the general
falling-factorial moment via the derivative partition sum.

All arithmetic here is exact (ints and Fractions); no floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dist import Specification, multinomial
from .series import TruncSeries
from .wpoly import ONE, WPoly


@dataclass(frozen=True)
class MomentReport:
    """Mean, variance, and falling-factorial moments E[R(R-1)..(R-m+1)]."""

    mean: Fraction
    variance: Fraction
    second_factorial: Fraction
    factorial_moments: tuple[Fraction, ...]
    total: int

    def __post_init__(self):
        object.__setattr__(self, "factorial_moments", tuple(self.factorial_moments))
        if self.variance < 0:
            raise ValueError("variance cannot be negative")
        if self.factorial_moments and self.factorial_moments[0] != self.mean:
            raise ValueError("first factorial moment must equal the mean")
        if self.variance != self.second_factorial - self.mean**2 + self.mean:
            raise ValueError("variance relation violated")


def _adjacent_products(spec: Specification) -> list[int]:
    return [spec.n[i] * spec.n[i + 1] for i in range(spec.k - 1)]


def mean_closed(spec: Specification) -> Fraction:
    """(n_1 n_2 + n_2 n_3 + ... + n_{k-1} n_k) / n."""
    return Fraction(sum(_adjacent_products(spec)), spec.size)


def second_factorial_closed(spec: Specification) -> Fraction:
    """E[R(R-1)] = (T^2 - sum n_i n_{i+1} (n_i + n_{i+1} - 1)) / (n (n-1))
    with T = sum n_i n_{i+1}.  A one-element multiset gets 0 by convention."""
    n = spec.size
    if n < 2:
        return Fraction(0)
    products = _adjacent_products(spec)
    t1 = sum(products)
    correction = sum(
        p * (spec.n[i] + spec.n[i + 1] - 1) for i, p in enumerate(products)
    )
    return Fraction(t1 * t1 - correction, n * (n - 1))


def variance_closed(spec: Specification) -> Fraction:
    """T^2/(n^2(n-1)) + T/(n-1) - sum n_i n_{i+1}(n_i+n_{i+1}) / (n(n-1)),
    T = sum n_i n_{i+1}.  A one-element multiset gets 0 by convention."""
    n = spec.size
    if n < 2:
        return Fraction(0)
    products = _adjacent_products(spec)
    t1 = sum(products)
    weighted = sum(p * (spec.n[i] + spec.n[i + 1]) for i, p in enumerate(products))
    return (
        Fraction(t1 * t1, n * n * (n - 1))
        + Fraction(t1, n - 1)
        - Fraction(weighted, n * (n - 1))
    )


def moments_from_polynomial(p: WPoly, m_max: int = 2) -> MomentReport:
    """Moments read off a succession polynomial: the falling-factorial moment
    of order m is (d^m p / dw^m)(1) / p(1)."""
    if not p:
        raise ValueError("zero polynomial has no distribution")
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    total = p(1)
    factorial = tuple(
        Fraction(p.derivative(m)(1), total) for m in range(1, m_max + 1)
    )
    mean = factorial[0]
    e2 = factorial[1] if m_max >= 2 else Fraction(p.derivative(2)(1), total)
    return MomentReport(
        mean=mean,
        variance=e2 - mean**2 + mean,
        second_factorial=e2,
        factorial_moments=factorial,
        total=total,
    )


def _window_sum(caps: Sequence[int], width: int) -> TruncSeries:
    """S_m for m = width-1: the sum over i of x_i x_{i+1} .. x_{i+width-1}."""
    k = len(caps)
    terms = {}
    for start in range(k - width + 1):
        if any(caps[j] < 1 for j in range(start, start + width)):
            continue
        vec = tuple(1 if start <= j < start + width else 0 for j in range(k))
        terms[vec] = ONE
    return TruncSeries(caps, terms)


def _weight_tuples(m: int):
    """Tuples (m_1..m_m) of nonnegative ints with sum_j j*m_j = m."""

    def rec(j: int, remaining: int, prefix: tuple[int, ...]):
        if j > m:
            if remaining == 0:
                yield prefix
            return
        for count in range(remaining // j + 1):
            yield from rec(j + 1, remaining - j * count, prefix + (count,))

    yield from rec(1, m, ())


def factorial_moments_dm(spec: Specification, m_max: int) -> list[Fraction]:
    """E[R^(m)] for m = 1..m_max via the derivative partition sum: the m-th
    w-derivative of the generating function at w=1 is

        m! * sum over (m_1..m_m) with sum j*m_j = m of
            multinomial(M; m_1..m_m) * prod_j S_j^{m_j} / (1 - S_0)^{M+1}

    with M = sum m_j and S_j the consecutive-window sums; the coefficient of
    x^n, divided by the number of arrangements, is the moment."""
    n_vec = spec.n
    n = spec.size
    if m_max < 1 or m_max > n - 1:
        raise ValueError(f"moment order must lie in 1..{n - 1}, got {m_max}")
    caps = n_vec
    total = multinomial(n_vec)
    one = TruncSeries.one(caps)
    windows = [_window_sum(caps, width) for width in range(1, min(m_max + 1, spec.k) + 1)]
    inv = (one - windows[0]).inverse()
    inv_powers: dict[int, TruncSeries] = {1: inv}

    def inv_power(t: int) -> TruncSeries:
        if t not in inv_powers:
            inv_powers[t] = inv_power(t - 1) * inv
        return inv_powers[t]

    window_powers: dict[tuple[int, int], TruncSeries] = {}

    def s_power(j: int, e: int) -> TruncSeries | None:
        # S_j^e, or None when S_j vanishes (window longer than k)
        if j >= spec.k or windows[j].is_zero:
            return None
        key = (j, e)
        if key not in window_powers:
            window_powers[key] = windows[j] if e == 1 else s_power(j, e - 1) * windows[j]
        return window_powers[key]

    out = []
    for m in range(1, m_max + 1):
        deriv_coeff = 0
        for weights in _weight_tuples(m):
            term = None
            dead = False
            for j, e in enumerate(weights, start=1):
                if e == 0:
                    continue
                factor = s_power(j, e)
                if factor is None:
                    dead = True
                    break
                term = factor if term is None else term * factor
            if dead:
                continue
            big_m = sum(weights)
            coeff = math.factorial(big_m)
            for e in weights:
                coeff //= math.factorial(e)
            term = inv_power(big_m + 1) if term is None else term * inv_power(big_m + 1)
            extracted = term.coeff(n_vec)
            if extracted.degree > 0:
                raise AssertionError("moment extraction must be w-free")
            deriv_coeff += coeff * (extracted.coeffs[0] if extracted.coeffs else 0)
        out.append(Fraction(math.factorial(m) * deriv_coeff, total))
    return out


def factorial_moment_dm(spec: Specification, m: int) -> Fraction:
    """E[R^(m)] = E[R(R-1)..(R-m+1)] for a single order m."""
    return factorial_moments_dm(spec, m)[-1]


def moment_report(spec: Specification, m_max: int = 2) -> MomentReport:
    """Closed-form mean/variance plus factorial moments up to m_max (orders
    beyond the maximum possible succession count are exactly zero)."""
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    n = spec.size
    reachable = min(m_max, n - 1)
    factorial = list(factorial_moments_dm(spec, reachable)) if reachable >= 1 else []
    factorial += [Fraction(0)] * (m_max - len(factorial))
    return MomentReport(
        mean=mean_closed(spec),
        variance=variance_closed(spec),
        second_factorial=second_factorial_closed(spec),
        factorial_moments=tuple(factorial),
        total=multinomial(spec.n),
    )
