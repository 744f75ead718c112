"""Perron eigenpair by shifted power iteration, and the spectral bound on walk counts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.sparse as sp

from .graph import Graph, is_connected, is_regular


class NotConvergedError(RuntimeError):
    pass


class IndeterminateCrossover(ArithmeticError):
    """lambda agrees with the maximum degree to within tolerance on a non-regular graph."""


@dataclass(frozen=True)
class SpectralResult:
    """Approximate Perron pair with ``min(nu) == 1``.

    ``residual`` is ``||A nu - lambda nu||_inf / lambda``.
    """

    lam: float
    nu: np.ndarray
    iterations: int
    residual: float

    @property
    def nu_norm_sq(self) -> float:
        return float(np.dot(self.nu, self.nu))


def adjacency_csr(g: Graph) -> sp.csr_matrix:
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(a) for a in g.adj])
    indices = np.fromiter((v for a in g.adj for v in a), dtype=np.int64, count=int(indptr[-1]))
    data = np.ones(len(indices), dtype=np.float64)
    return sp.csr_matrix((data, indices, indptr), shape=(g.n, g.n))


def perron(g: Graph, tol: float = 1e-12, max_iters: Optional[int] = None) -> SpectralResult:
    """Power iteration on ``A + I`` from the all-ones vector.

    The unit shift keeps bipartite graphs from oscillating between the
    eigenvalues ``+lambda`` and ``-lambda``.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if g.m == 0:
        raise ValueError("graph has no edges; the Perron eigenvalue is not positive")
    if not is_connected(g):
        raise ValueError("graph is not connected; the Perron vector is not unique")
    if max_iters is None:
        max_iters = 100 * g.n + 1000

    a = adjacency_csr(g)
    x = np.ones(g.n)
    lam = 0.0
    residual = math.inf
    for it in range(1, max_iters + 1):
        y = a @ x + x
        # Rayleigh quotient of the shifted operator, then undo the shift.
        lam = float(np.dot(x, y) / np.dot(x, x)) - 1.0
        nu = x / x.min()
        residual = float(np.max(np.abs(a @ nu - lam * nu))) / lam
        if residual <= tol:
            return SpectralResult(lam, nu, it, residual)
        x = y / y.max()
    raise NotConvergedError(
        f"power iteration did not reach residual {tol:g} in {max_iters} iterations "
        f"(last residual {residual:.3g})"
    )


def _log_bound(sr: SpectralResult, k: int) -> float:
    return math.log(sr.nu_norm_sq) + k * math.log(sr.lam)


def spectral_walk_bound(g: Graph, k: int, sr: SpectralResult) -> float:
    """``||nu||^2 * lambda**k``; an upper bound on the number of k-walks.

    Returns ``inf`` when the value exceeds the float range.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if len(sr.nu) != g.n:
        raise ValueError("spectral result does not belong to this graph")
    try:
        return sr.nu_norm_sq * sr.lam**k
    except OverflowError:
        return math.inf


def bound_below_max_degree_power(sr: SpectralResult, k: int, max_degree: int, rtol: float = 1e-9) -> bool:
    """Strict comparison ``||nu||^2 lambda^k < Delta^k`` in log space.

    Ratios within ``rtol`` of 1 count as ties and are not "smaller".
    """
    return _log_bound(sr, k) - k * math.log(max_degree) < -rtol


def crossover_k(g: Graph, sr: SpectralResult, rtol: float = 1e-9) -> Optional[int]:
    """Smallest ``k >= 1`` with ``||nu||^2 lambda^k < Delta^k``, or ``None`` for regular graphs."""
    if not is_connected(g):
        raise ValueError("crossover is defined for connected graphs only")
    delta = g.max_degree
    regular = is_regular(g) is not None
    if abs(sr.lam - delta) <= rtol * delta:
        if regular:
            return None
        raise IndeterminateCrossover(
            f"lambda={sr.lam!r} is within {rtol:g} of max degree {delta} but the graph is not regular"
        )
    if regular:
        raise IndeterminateCrossover(
            f"graph is {delta}-regular but lambda={sr.lam!r} differs from {delta}"
        )
    if sr.lam > delta:
        raise IndeterminateCrossover(f"lambda={sr.lam!r} exceeds max degree {delta}")

    estimate = math.log(sr.nu_norm_sq) / (math.log(delta) - math.log(sr.lam))
    k = max(1, math.ceil(estimate))
    # Step back while the previous k already crosses, forward while this one does not.
    while k > 1 and bound_below_max_degree_power(sr, k - 1, delta, rtol):
        k -= 1
    while not bound_below_max_degree_power(sr, k, delta, rtol):
        k += 1
    return k
