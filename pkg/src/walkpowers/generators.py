"""Deterministic graph families used to build verification corpora."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, is_connected

FAMILIES = (
    "path",
    "cycle",
    "star",
    "complete",
    "complete_bipartite",
    "random_connected",
    "random_regular",
)

MAX_RETRIES = 10_000


class RetryBudgetExceeded(RuntimeError):
    """A randomized family failed to produce a valid graph within the retry budget."""


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices with centre 0, i.e. K_{1,n-1}."""
    if n < 2:
        raise ValueError(f"star needs n >= 2, got {n}")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b}; vertices ``0..a-1`` form the first side."""
    if a < 1 or b < 1:
        raise ValueError(f"complete bipartite needs a, b >= 1, got a={a}, b={b}")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def random_connected_graph(n: int, p: float, seed: int, max_retries: int = MAX_RETRIES) -> Graph:
    """Erdős–Rényi G(n, p) redrawn until connected."""
    if n < 1:
        raise ValueError(f"random_connected needs n >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(max_retries):
        g = Graph.from_edges(n, (e for e in pairs if rng.random() < p))
        if is_connected(g):
            return g
    raise RetryBudgetExceeded(
        f"no connected G({n}, {p}) in {max_retries} draws; p is too small for n"
    )


def random_regular_graph(n: int, d: int, seed: int, max_retries: int = MAX_RETRIES) -> Graph:
    """Uniform d-regular simple graph via the pairing model with rejection."""
    if n < 1 or d < 0 or d >= n or (n * d) % 2:
        raise ValueError(f"random_regular needs 0 <= d < n and n*d even, got n={n}, d={d}")
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(d)]
    for _ in range(max_retries):
        rng.shuffle(points)
        edges = set()
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            e = (u, v) if u < v else (v, u)
            if u == v or e in edges:
                break
            edges.add(e)
        else:
            return Graph.from_edges(n, edges)
    raise RetryBudgetExceeded(
        f"pairing model produced no simple {d}-regular graph on {n} vertices in {max_retries} tries"
    )


def generate(family: str, seed: int = 0, **params) -> Graph:
    """Build a graph of the named family.

    ``params`` takes ``n`` for every family except ``complete_bipartite``
    (``a``, ``b``); ``random_connected`` also needs ``p`` and
    ``random_regular`` needs ``d``. The seed is ignored by the
    deterministic families.
    """
    try:
        if family == "path":
            return path_graph(params["n"])
        if family == "cycle":
            return cycle_graph(params["n"])
        if family == "star":
            return star_graph(params["n"])
        if family == "complete":
            return complete_graph(params["n"])
        if family == "complete_bipartite":
            return complete_bipartite_graph(params["a"], params["b"])
        if family == "random_connected":
            return random_connected_graph(params["n"], params["p"], seed)
        if family == "random_regular":
            return random_regular_graph(params["n"], params["d"], seed)
    except KeyError as exc:
        raise ValueError(f"family {family!r} is missing parameter {exc.args[0]!r}") from None
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
