"""Exact check of ``tr(A^k J) <= sum_i d_i^k`` for real symmetric matrices.

Entries are :class:`fractions.Fraction`; ``d_i`` is the absolute row sum.
No floating point is used anywhere in this module.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .graph import Graph


class MatrixFormatError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class SymMatrix:
    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError(f"entries must be {self.n}x{self.n}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i},{j})/({j},{i})")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Union[int, Fraction, str]]]) -> "SymMatrix":
        return cls(len(rows), tuple(tuple(Fraction(x) for x in r) for r in rows))

    def apply(self, x: Sequence[Fraction]) -> list[Fraction]:
        return [sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in self.entries]


def adjacency_matrix(g: Graph) -> SymMatrix:
    rows = [[Fraction(0)] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        rows[u][v] = rows[v][u] = Fraction(1)
    return SymMatrix(g.n, tuple(tuple(r) for r in rows))


def _parse_entry(token: str, lineno: int) -> Fraction:
    num, sep, den = token.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise MatrixFormatError(f"malformed entry {token!r}", lineno) from None
    if q == 0:
        raise MatrixFormatError(f"zero denominator in {token!r}", lineno)
    if q < 0:
        raise MatrixFormatError(f"denominator must be positive in {token!r}", lineno)
    return Fraction(p, q)


def parse_matrix(text: Union[str, bytes]) -> SymMatrix:
    """Parse ``n`` followed by ``n`` rows of ``n`` entries (integers or ``p/q``)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [
        (i, raw.strip())
        for i, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.strip().startswith("#")
    ]
    if not lines:
        raise MatrixFormatError("empty input: expected dimension")
    lineno, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise MatrixFormatError(f"malformed dimension {header!r}", lineno) from None
    if n < 1:
        raise MatrixFormatError(f"dimension must be >= 1, got {n}", lineno)
    body = lines[1:]
    if len(body) != n:
        raise MatrixFormatError(f"expected {n} rows, got {len(body)}")
    rows = []
    for lineno, line in body:
        tokens = line.split()
        if len(tokens) != n:
            raise MatrixFormatError(f"expected {n} entries, got {len(tokens)}", lineno)
        rows.append([_parse_entry(t, lineno) for t in tokens])
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise MatrixFormatError(
                    f"matrix is not symmetric at ({i},{j})/({j},{i}): {rows[i][j]} != {rows[j][i]}",
                    body[i][0],
                )
    return SymMatrix(n, tuple(tuple(r) for r in rows))


def serialize_matrix(m: SymMatrix) -> str:
    return "\n".join([str(m.n)] + [" ".join(str(x) for x in row) for row in m.entries]) + "\n"


def abs_row_sums(m: SymMatrix) -> list[Fraction]:
    return [sum((abs(x) for x in row), Fraction(0)) for row in m.entries]


def grand_sum_power(m: SymMatrix, k: int) -> Fraction:
    """Sum of all entries of ``A^k``, by ``k`` products with the all-ones vector."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    x = [Fraction(1)] * m.n
    for _ in range(k):
        x = m.apply(x)
    return sum(x, Fraction(0))


@dataclass(frozen=True)
class MatrixRecord:
    k: int
    grand_sum: Fraction
    degree_power_sum: Fraction
    holds: bool

    @property
    def equality(self) -> bool:
        return self.grand_sum == self.degree_power_sum

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "grand_sum": str(self.grand_sum),
            "degree_power_sum": str(self.degree_power_sum),
            "holds": self.holds,
            "equality": self.equality,
        }


def verify_matrix_inequality(m: SymMatrix, kmax: int) -> list[MatrixRecord]:
    """One record per ``k`` in ``1..kmax``; a record with ``holds=False`` is a counterexample."""
    if kmax < 1:
        raise ValueError(f"kmax must be >= 1, got {kmax}")
    d = abs_row_sums(m)
    out = []
    x = [Fraction(1)] * m.n
    for k in range(1, kmax + 1):
        x = m.apply(x)
        lhs = sum(x, Fraction(0))
        rhs = sum((di**k for di in d), Fraction(0))
        out.append(MatrixRecord(k, lhs, rhs, lhs <= rhs))
    return out


def random_symmetric_matrix(
    n: int, rng: random.Random, max_num: int = 3, max_den: int = 3
) -> SymMatrix:
    """Symmetric matrix with entries ``p/q``, ``|p| <= max_num``, ``1 <= q <= max_den``."""
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            x = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
            rows[i][j] = rows[j][i] = x
    return SymMatrix(n, tuple(tuple(r) for r in rows))
