"""Exact characteristic polynomials of mixed-graph adjacency matrices.

Uses the Faddeev-LeVerrier recurrence over Python integers; every division
is exact, so cospectrality is decided without floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import MixedGraph

__all__ = ["CharPoly", "char_poly", "cospectral"]


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial x^n + c_{n-1} x^{n-1} + ... + c_0, stored
    lowest degree first (so coefficients[-1] == 1)."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def highest_first(self) -> tuple[int, ...]:
        return tuple(reversed(self.coefficients))

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.highest_first())


def _matmul(a, b, n):
    bt = [[b[j][i] for j in range(n)] for i in range(n)]
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def char_poly(g: MixedGraph) -> CharPoly:
    """Characteristic polynomial of the adjacency matrix, exact."""
    n = g.n
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    a = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        a[u][v] = 1
        a[v][u] = 1
    for u, v in g.arcs:
        a[u][v] = 1
    # Faddeev-LeVerrier: M_k = A (M_{k-1} + c_{k-1} I), c_k = -tr(M_k) / k
    coeffs_high = [1]
    m = [row[:] for row in a]
    for k in range(1, n + 1):
        tr = sum(m[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("Faddeev-LeVerrier trace not divisible")
        c = -(tr // k)
        coeffs_high.append(c)
        if k < n:
            for i in range(n):
                m[i][i] += c
            m = _matmul(a, m, n)
    return CharPoly(tuple(reversed(coeffs_high)))


def cospectral(g: MixedGraph, h: MixedGraph) -> bool:
    """True iff the adjacency characteristic polynomials coincide."""
    if g.n != h.n:
        return False
    return char_poly(g) == char_poly(h)
