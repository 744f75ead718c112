"""Simple undirected graphs: representation, edge-list I/O and structural predicates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union


class GraphFormatError(ValueError):
    """Raised when edge-list text cannot be turned into a simple graph."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _canonical(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``edges`` holds each edge once as ``(u, v)`` with ``u < v``, sorted.
    ``adj`` is derived and holds strictly increasing neighbour tuples.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"a graph needs at least one vertex, got n={self.n}")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = _canonical(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        edges = tuple(sorted(seen))
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adj", tuple(tuple(sorted(x)) for x in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adj)

    def degree(self, i: int) -> int:
        return len(self.adj[i])


def degree_vector(g: Graph) -> list[int]:
    """Return the degree sequence ``d[i] = |adj[i]|`` in vertex order."""
    return [len(a) for a in g.adj]


def is_regular(g: Graph) -> Optional[int]:
    """Return the common degree if ``g`` is regular, else ``None``."""
    d = degree_vector(g)
    return d[0] if all(x == d[0] for x in d) else None


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    comp = [-1] * g.n
    out = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        comp[s] = len(out)
        members = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if comp[v] < 0:
                    comp[v] = comp[s]
                    members.append(v)
                    queue.append(v)
        out.append(sorted(members))
    return out


def is_connected(g: Graph) -> bool:
    """True iff a breadth-first search from vertex 0 reaches every vertex."""
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = True
                reached += 1
                queue.append(v)
    return reached == g.n


def components_regular(g: Graph) -> bool:
    """True iff every connected component is a regular graph."""
    for comp in connected_components(g):
        degs = {len(g.adj[v]) for v in comp}
        if len(degs) > 1:
            return False
    return True


def _significant_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"malformed integer {token!r}", lineno) from None


def parse_edge_list(text: Union[str, bytes]) -> Graph:
    """Parse the edge-list format: ``n`` on the first significant line, then ``u v`` pairs.

    Lines starting with ``#`` and blank lines are ignored. Errors carry the
    1-based line number of the offending line.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"input is not valid UTF-8: {exc}") from None

    lines = _significant_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphFormatError("empty input: expected vertex count") from None
    tokens = header.split()
    if len(tokens) != 1:
        raise GraphFormatError(f"expected a single vertex count, got {header!r}", lineno)
    n = _parse_int(tokens[0], lineno)
    if n < 1:
        raise GraphFormatError(f"vertex count must be >= 1, got {n}", lineno)

    seen: dict[tuple[int, int], int] = {}
    for lineno, line in lines:
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        u, v = (_parse_int(t, lineno) for t in tokens)
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphFormatError(f"vertex {x} out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        e = _canonical(u, v)
        if e in seen:
            raise GraphFormatError(f"duplicate edge {e[0]} {e[1]} (first on line {seen[e]})", lineno)
        seen[e] = lineno
    return Graph(n, tuple(seen))


def serialize_edge_list(g: Graph) -> str:
    """Canonical edge-list text: ``n`` then sorted ``u v`` lines with ``u < v``."""
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
