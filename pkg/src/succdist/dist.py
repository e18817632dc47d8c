"""Succession-count distributions, their recurrence in one multiplicity, and
closed forms for two and three distinct integers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import genfun
from .wpoly import ONE, WPoly, ZERO

W_MINUS_1 = WPoly((-1, 1))

#: permutations of 1..k with no succession, for k = 1..10 (OEIS A000255)
A000255_KNOWN = (1, 1, 3, 11, 53, 309, 2119, 16687, 148329, 1468457)


def multinomial(multiplicities: Sequence[int]) -> int:
    """Number of distinct arrangements: n! / (n_1! ... n_k!)."""
    total = math.factorial(sum(multiplicities))
    for m in multiplicities:
        total //= math.factorial(m)
    return total


@dataclass(frozen=True)
class Specification:
    """Multiplicity vector [n_1..n_k]: integer i appears n_i times."""

    n: tuple[int, ...]

    def __post_init__(self):
        n = tuple(int(v) for v in self.n)
        object.__setattr__(self, "n", n)
        if not n:
            raise ValueError("specification must have k >= 1")
        if any(v < 0 for v in n):
            raise ValueError(f"multiplicities must be nonnegative, got {n}")
        if sum(n) < 1:
            raise ValueError("specification must contain at least one element")

    @classmethod
    def parse(cls, text: str) -> "Specification":
        """Parse 'n1,n2,...,nk'."""
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"cannot parse specification {text!r}: {exc}") from None

    @property
    def k(self) -> int:
        return len(self.n)

    @property
    def size(self) -> int:
        """Sequence length n = sum of multiplicities."""
        return sum(self.n)

    def total_arrangements(self) -> int:
        return multinomial(self.n)

    def multiset(self) -> list[int]:
        """The sorted multiset of values, e.g. (1, 2, 2) -> [1, 2, 2, 3, 3]."""
        return [value for value, count in enumerate(self.n, start=1) for _ in range(count)]

    def replace_count(self, index: int, value: int) -> "Specification":
        n = list(self.n)
        n[index] = value
        return Specification(tuple(n))


@dataclass(frozen=True)
class SuccessionDistribution:
    """Counts[r] = number of arrangements with exactly r successions."""

    spec: Specification
    counts: tuple[int, ...]
    total: int

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        if counts and counts[-1] == 0:
            raise ValueError("counts must not have a trailing zero")
        if sum(counts) != self.total:
            raise ValueError(f"counts sum {sum(counts)} != total {self.total}")
        if self.total != multinomial(self.spec.n):
            raise ValueError("total does not match the number of arrangements")

    @classmethod
    def from_polynomial(cls, spec: Specification, p: WPoly) -> "SuccessionDistribution":
        return cls(spec=spec, counts=p.coeffs, total=p(1))

    def polynomial(self) -> WPoly:
        return WPoly(self.counts)

    def probability(self, r: int) -> Fraction:
        count = self.counts[r] if 0 <= r < len(self.counts) else 0
        return Fraction(count, self.total)


def distribution(spec: Specification) -> SuccessionDistribution:
    """Full distribution of succession counts, from the generating function."""
    p = genfun.succession_polynomial(spec.n)
    return SuccessionDistribution.from_polynomial(spec, p)


def recurrence_order(spec: Specification, direction: int) -> int:
    """Order d of the recurrence in multiplicity `direction` (0-based):
    one plus the sum of the other multiplicities."""
    if not 0 <= direction < spec.k:
        raise ValueError(f"direction {direction} out of range for k={spec.k}")
    return spec.size - spec.n[direction] + 1


def family_specs(spec: Specification, direction: int, count: int) -> list[Specification]:
    """Specs with n[direction] = base, base+1, ..., base+count-1."""
    base = spec.n[direction]
    return [spec.replace_count(direction, base + t) for t in range(count)]


def family_polynomials(spec: Specification, direction: int, count: int) -> list[WPoly]:
    """Succession polynomials along `direction`, extracted from one series
    inversion at the largest caps of the family."""
    if count < 1:
        raise ValueError("count must be >= 1")
    top = spec.replace_count(direction, spec.n[direction] + count - 1)
    inv = genfun.unrestricted_denominator(top.n).inverse()
    return [inv.coeff(member.n) for member in family_specs(spec, direction, count)]


def _alternating_sum(values: Sequence, d: int):
    acc = None
    for j in range(d + 1):
        term = values[j] * ((-1) ** j * math.comb(d, j))
        acc = term if acc is None else acc + term
    return acc


def verify_p_recurrence(
    spec: Specification, direction: int, polynomials: Sequence[WPoly] | None = None
) -> bool:
    """Check sum_{j=0..d} (-1)^j C(d,j) P(n with n_i+j) = 0 as a polynomial
    identity, with d the recurrence order of the base spec (n_i >= 1).

    Pass `polynomials` to check a precomputed family (at least d+1 entries,
    for n_i, n_i+1, ..., n_i+d).
    """
    if spec.n[direction] < 1:
        raise ValueError("recurrence needs n_i >= 1 at the varying index")
    d = recurrence_order(spec, direction)
    if polynomials is None:
        polynomials = family_polynomials(spec, direction, d + 1)
    if len(polynomials) < d + 1:
        raise ValueError(f"family too short: need {d + 1} polynomials, got {len(polynomials)}")
    return _alternating_sum(polynomials, d) == ZERO


def verify_s_recurrence(spec: Specification, direction: int) -> bool:
    """Check the same alternating identity coefficientwise on the integer
    counts tables, one succession count r at a time."""
    if spec.n[direction] < 1:
        raise ValueError("recurrence needs n_i >= 1 at the varying index")
    d = recurrence_order(spec, direction)
    tables = [distribution(member).counts for member in family_specs(spec, direction, d + 1)]
    width = max(len(t) for t in tables)
    for r in range(width):
        column = [t[r] if r < len(t) else 0 for t in tables]
        if _alternating_sum(column, d) != 0:
            return False
    return True


def extend_by_recurrence(
    spec: Specification, direction: int, polynomials: Sequence[WPoly]
) -> WPoly:
    """Given the d consecutive polynomials starting at the base spec, solve
    the recurrence for the next one (at n_i + d)."""
    if spec.n[direction] < 1:
        raise ValueError("recurrence needs n_i >= 1 at the varying index")
    d = recurrence_order(spec, direction)
    if len(polynomials) != d:
        raise ValueError(f"underdetermined family: need exactly {d} polynomials, got {len(polynomials)}")
    acc = ZERO
    for j in range(d):
        acc = acc + polynomials[j] * ((-1) ** j * math.comb(d, j))
    return acc * ((-1) ** (d + 1))


def closed_form_k2(n1: int, n2: int) -> WPoly:
    """P(w) for two distinct integers: sum_r C(n1,r) C(n2,r) w^r."""
    if n1 < 0 or n2 < 0 or n1 + n2 < 1:
        raise ValueError(f"need nonnegative counts with n1+n2 >= 1, got ({n1}, {n2})")
    return WPoly(math.comb(n1, r) * math.comb(n2, r) for r in range(min(n1, n2) + 1))


def closed_form_k3(n1: int, n2: int, n3: int) -> WPoly:
    """P(w) for three distinct integers: the triple sum over (i, j, l) of
    multinomial(n-i-j-2l; i, j, l, n1-i-l, n2-i-j-l, n3-j-l) * (w-1)^(i+j+2l),
    restricted to tuples where all six parts are nonnegative."""
    if min(n1, n2, n3) < 0 or n1 + n2 + n3 < 1:
        raise ValueError(f"need nonnegative counts summing to >= 1, got ({n1}, {n2}, {n3})")
    power_coeffs: dict[int, int] = {}
    for i in range(n1 + 1):
        for j in range(n2 + 1):
            for l in range(n3 + 1):
                parts = (i, j, l, n1 - i - l, n2 - i - j - l, n3 - j - l)
                if min(parts) < 0:
                    continue
                value = math.factorial(sum(parts))
                for part in parts:
                    value //= math.factorial(part)
                m = i + j + 2 * l
                power_coeffs[m] = power_coeffs.get(m, 0) + value
    result = ZERO
    wm1_power = ONE
    for m in range(max(power_coeffs) + 1):
        c = power_coeffs.get(m, 0)
        if c:
            result = result + wm1_power * c
        wm1_power = wm1_power * W_MINUS_1
    return result


def no_succession_counts(k_max: int) -> tuple[int, ...]:
    """Number of permutations of 1..k with no succession, for k = 1..k_max,
    computed from the generating function."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    out = []
    for k in range(1, k_max + 1):
        p = genfun.succession_polynomial([1] * k)
        out.append(p.coeffs[0] if p.coeffs else 0)
    return tuple(out)
