"""Brute-force ground truth: visit every distinct arrangement of the multiset
and count successions directly from the definition."""

from __future__ import annotations

import os
from itertools import pairwise
from typing import Iterator, Sequence

from .dist import Specification, SuccessionDistribution, multinomial

DEFAULT_BUDGET = 10**7
BUDGET_ENV_VAR = "SUCCDIST_BUDGET"


class BudgetExceededError(RuntimeError):
    """The spec has more arrangements than the enumeration budget allows."""


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    value = os.environ.get(BUDGET_ENV_VAR)
    if value is None:
        return default
    try:
        budget = int(value)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {value!r}") from None
    if budget < 1:
        raise ValueError(f"{BUDGET_ENV_VAR} must be positive, got {budget}")
    return budget


def count_successions(seq: Sequence[int]) -> int:
    """Number of adjacent pairs (a, b) with b - a == 1."""
    if not seq:
        raise ValueError("sequence must be nonempty")
    return sum(1 for a, b in pairwise(seq) if b - a == 1)


def _next_permutation(a: list[int]) -> bool:
    """Advance to the lexicographically next arrangement in place; False at
    the last one.  Handles repeated values without revisiting arrangements."""
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = a[:i:-1]
    return True


def iter_permutations(spec: Specification) -> Iterator[tuple[int, ...]]:
    """All distinct arrangements, in lexicographic order."""
    current = spec.multiset()
    yield tuple(current)
    while _next_permutation(current):
        yield tuple(current)


def enumerate_distribution(spec: Specification, budget: int | None = None) -> SuccessionDistribution:
    """Exact succession distribution by full enumeration.

    Refuses (rather than truncates) when the number of arrangements exceeds
    the budget: an oracle must never be approximate.
    """
    if budget is None:
        budget = DEFAULT_BUDGET
    total = multinomial(spec.n)
    if total > budget:
        raise BudgetExceededError(
            f"{total} arrangements exceed the enumeration budget {budget}"
        )
    counts = [0] * spec.size
    visited = 0
    for seq in iter_permutations(spec):
        counts[count_successions(seq)] += 1
        visited += 1
    if visited != total:
        raise AssertionError(f"visited {visited} arrangements, expected {total}")
    while counts and counts[-1] == 0:
        counts.pop()
    return SuccessionDistribution(spec=spec, counts=tuple(counts), total=total)
