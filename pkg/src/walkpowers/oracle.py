"""Brute-force walk enumeration, kept deliberately separate from the sparse engine."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class OracleCap:
    n: int = 8
    k: int = 8


class OracleCapExceeded(ValueError):
    pass


def brute_force_walks(g: Graph, k: int, cap: OracleCap = OracleCap()) -> int:
    """Count every vertex sequence ``(v0, ..., vk)`` with consecutive vertices adjacent.

    Exponential in ``k``; refuses inputs beyond ``cap``.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if g.n > cap.n or k > cap.k:
        raise OracleCapExceeded(
            f"oracle limited to n <= {cap.n}, k <= {cap.k}; got n={g.n}, k={k}"
        )
    neighbours = {u: set() for u in range(g.n)}
    for u, v in g.edges:
        neighbours[u].add(v)
        neighbours[v].add(u)

    def extend(last: int, remaining: int) -> int:
        if remaining == 0:
            return 1
        count = 0
        for nxt in neighbours[last]:
            count += extend(nxt, remaining - 1)
        return count

    return sum(extend(start, k) for start in range(g.n))
