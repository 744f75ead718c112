"""Degree power sums, the Laplacian quadratic form and the two-term power lemma."""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, degree_vector


def degree_power_sum(g: Graph, k: int) -> int:
    """Sum of ``d_i**k`` over all vertices, with ``0**0 == 1``."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return sum(d**k for d in degree_vector(g))


def laplacian_quadratic(g: Graph, f: Sequence[int]) -> int:
    """``<f, L f>`` with ``L = D - A``, evaluated as the sum over edges of ``(f(u) - f(v))**2``."""
    if len(f) != g.n:
        raise ValueError(f"vector has length {len(f)}, graph has {g.n} vertices")
    return sum((int(f[u]) - int(f[v])) ** 2 for u, v in g.edges)


def albertson_irregularity(g: Graph) -> int:
    """Sum over edges of squared degree differences; zero iff every edge joins equal degrees."""
    return laplacian_quadratic(g, degree_vector(g))


def power_lemma_gap(a: int, b: int, r: int) -> int:
    """Slack ``(a**r - b**r) * (a - b)`` in ``a**r*b + a*b**r <= a**(r+1) + b**(r+1)``.

    Both factors share a sign, so the result is never negative.
    """
    if a < 0 or b < 0:
        raise ValueError(f"a and b must be non-negative, got a={a}, b={b}")
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    return (a**r - b**r) * (a - b)
