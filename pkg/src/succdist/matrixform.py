"""The transfer-matrix route: G and H as solutions of a linear system over
the truncated series ring, and two independent determinant computations.

The k x k matrix M has 1 on the diagonal, -g_i * w immediately right of the
diagonal, and -g_i everywhere else in row i (the last row carries no w).
Then G = e M^{-1} y and H = e M^{-1} z with e the all-ones row,
y = (g_1..g_k)^T and z = (g_1..g_{k-1}, w g_k)^T.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .genfun import GHPair, succession_denominator
from .series import TruncSeries
from .wpoly import W

W_NEG = -W


@dataclass(frozen=True)
class SeriesMatrix:
    """Square grid of series sharing one set of caps."""

    entries: tuple[tuple[TruncSeries, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        k = len(entries)
        if k == 0 or any(len(row) != k for row in entries):
            raise ValueError("matrix must be square and nonempty")
        caps = entries[0][0].caps
        if any(e.caps != caps for row in entries for e in row):
            raise ValueError("all entries must share the same caps")

    @property
    def dim(self) -> int:
        return len(self.entries)


def _validate_g(g: Sequence[TruncSeries]) -> tuple[TruncSeries, ...]:
    g = tuple(g)
    if not g:
        raise ValueError("need at least one generating function")
    caps = g[0].caps
    for i, gi in enumerate(g):
        if gi.caps != caps:
            raise ValueError("all g_i must share the same caps")
        if gi.constant_term():
            raise ValueError(f"g_{i + 1} must have zero constant term")
    return g


def build_m(g: Sequence[TruncSeries]) -> SeriesMatrix:
    """The transfer matrix M for per-integer generating functions g_1..g_k."""
    g = _validate_g(g)
    k = len(g)
    caps = g[0].caps
    one = TruncSeries.one(caps)
    rows = []
    for i in range(k):
        neg = -g[i]
        row = []
        for j in range(k):
            if j == i:
                row.append(one)
            elif j == i + 1:
                row.append(g[i] * W_NEG)
            else:
                row.append(neg)
        rows.append(tuple(row))
    return SeriesMatrix(entries=tuple(rows))


def gh_via_solve(g: Sequence[TruncSeries]) -> GHPair:
    """G and H by Gaussian elimination on M against both right-hand sides.

    Every pivot has constant term 1 (M's constant term is the identity and
    off-diagonal entries have none), so elimination over the truncated ring
    needs no pivot search.
    """
    g = _validate_g(g)
    k = len(g)
    caps = g[0].caps
    m = build_m(g)
    rows = [list(row) for row in m.entries]
    for i in range(k):
        rows[i].append(g[i])                     # y column
        rows[i].append(g[i] * W if i == k - 1 else g[i])  # z column
    for i in range(k):
        pivot_inv = rows[i][i].inverse()
        rows[i] = [entry * pivot_inv for entry in rows[i]]
        for j in range(i + 1, k):
            factor = rows[j][i]
            if factor.is_zero:
                continue
            rows[j] = [
                rows[j][col] - factor * rows[i][col] for col in range(k + 2)
            ]
    v = [None] * k
    u = [None] * k
    for i in reversed(range(k)):
        sv, su = rows[i][k], rows[i][k + 1]
        for j in range(i + 1, k):
            sv = sv - rows[i][j] * v[j]
            su = su - rows[i][j] * u[j]
        v[i], u[i] = sv, su
    G = v[0]
    H = u[0]
    for i in range(1, k):
        G = G + v[i]
        H = H + u[i]
    return GHPair(G=G, H=H)


def det_m(g: Sequence[TruncSeries]) -> TruncSeries:
    """det M by fraction-free elimination: each 2x2 cross-product step is
    divided exactly by the previous pivot (a unit in the truncated ring)."""
    g = _validate_g(g)
    k = len(g)
    a = [list(row) for row in build_m(g).entries]
    prev_inv = TruncSeries.one(g[0].caps)
    for i in range(k - 1):
        pivot = a[i][i]
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                a[r][c] = (pivot * a[r][c] - a[r][i] * a[i][c]) * prev_inv
        prev_inv = pivot.inverse()
    return a[k - 1][k - 1]


def det_m_closed(g: Sequence[TruncSeries]) -> TruncSeries:
    """det M from the closed product formula:
    prod_i (1 + g_i) times the succession denominator in f_i = g_i/(1+g_i)."""
    g = _validate_g(g)
    caps = g[0].caps
    one = TruncSeries.one(caps)
    f = [gi * (one + gi).inverse() for gi in g]
    result = succession_denominator(f, caps)
    for gi in g:
        result = result * (one + gi)
    return result
