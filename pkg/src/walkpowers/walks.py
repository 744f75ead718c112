"""Exact walk counts via repeated sparse adjacency application.

All counts are Python ints, so nothing overflows no matter how large ``k`` gets.
A^k is never formed; each step is one pass over the adjacency lists.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph


def adjacency_apply(g: Graph, x: Sequence[int]) -> list[int]:
    """Return ``A x``: entry ``i`` is the sum of ``x`` over the neighbours of ``i``."""
    if len(x) != g.n:
        raise ValueError(f"vector has length {len(x)}, graph has {g.n} vertices")
    return [sum(x[v] for v in nbrs) for nbrs in g.adj]


def walk_vector(g: Graph, k: int) -> list[int]:
    """``A^k j``; entry ``i`` counts the walks of length ``k`` starting at ``i``."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    x = [1] * g.n
    for _ in range(k):
        x = adjacency_apply(g, x)
    return x


def total_walks(g: Graph, k: int) -> int:
    """Number of walks of length ``k`` in ``g``, i.e. the grand sum of ``A^k``."""
    return sum(walk_vector(g, k))


def mixed_walk_sum(g: Graph, r: int, s: int) -> int:
    """``<j, A^r D^s j>`` = sum over i, j of ``(A^r)_ij * d_j**s``.

    With ``r + s = k`` these are the intermediate terms of the telescoping
    bound between the walk count and the degree power sum.
    """
    if r < 0 or s < 0:
        raise ValueError(f"r and s must be non-negative, got r={r}, s={s}")
    x = [len(nbrs) ** s for nbrs in g.adj]
    for _ in range(r):
        x = adjacency_apply(g, x)
    return sum(x)
