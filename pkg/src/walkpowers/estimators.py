"""scikit-learn compatible wrappers around the walk and spectral routines.

Inputs may be :class:`~walkpowers.graph.Graph` objects or square symmetric
0/1 adjacency arrays; :func:`check_graph` normalizes either form.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .degrees import albertson_irregularity, degree_power_sum
from .graph import Graph
from .spectral import crossover_k, perron, spectral_walk_bound
from .walks import adjacency_apply

QUANTITIES = ("walks", "degree_power_sum", "gap")


def check_graph(g) -> Graph:
    """Return ``g`` as a :class:`Graph`, converting a dense adjacency matrix if needed."""
    if isinstance(g, Graph):
        return g
    a = np.asarray(g)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a Graph or a square adjacency matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("adjacency matrix is not symmetric")
    if np.any(np.diag(a) != 0):
        raise ValueError("adjacency matrix has non-zero diagonal (self-loops)")
    if not np.all((a == 0) | (a == 1)):
        raise ValueError("adjacency matrix entries must be 0 or 1")
    iu, ju = np.nonzero(np.triu(a, 1))
    return Graph.from_edges(a.shape[0], zip(iu.tolist(), ju.tolist()))


def check_graphs(X) -> list[Graph]:
    if isinstance(X, Graph):
        raise TypeError("expected a sequence of graphs; wrap a single graph in a list")
    graphs = [check_graph(g) for g in X]
    if not graphs:
        raise ValueError("need at least one graph")
    return graphs


class WalkDegreeProfile(TransformerMixin, BaseEstimator):
    """Map each graph to exact per-k walk counts, degree power sums or their gap.

    Parameters
    ----------
    kmax : int
        Largest walk length; columns are ``k = 0..kmax``.
    quantity : {"walks", "degree_power_sum", "gap"}
        Which sequence to emit. ``gap`` is degree power sum minus walk count.

    The output has ``dtype=object`` and holds Python ints, since the values
    outgrow every fixed-width integer type.
    """

    def __init__(self, kmax=12, quantity="gap"):
        self.kmax = kmax
        self.quantity = quantity

    def _validate_params(self):
        if not isinstance(self.kmax, (int, np.integer)) or self.kmax < 0:
            raise ValueError(f"kmax must be a non-negative int, got {self.kmax!r}")
        if self.quantity not in QUANTITIES:
            raise ValueError(f"quantity must be one of {QUANTITIES}, got {self.quantity!r}")

    def fit(self, X, y=None):
        self._validate_params()
        check_graphs(X)
        self.n_features_out_ = self.kmax + 1
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_out_")
        graphs = check_graphs(X)
        out = np.empty((len(graphs), self.kmax + 1), dtype=object)
        for row, g in enumerate(graphs):
            x = [1] * g.n
            for k in range(self.kmax + 1):
                if k:
                    x = adjacency_apply(g, x)
                w = sum(x)
                if self.quantity == "walks":
                    out[row, k] = w
                else:
                    dk = degree_power_sum(g, k)
                    out[row, k] = dk if self.quantity == "degree_power_sum" else dk - w
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "n_features_out_")
        return np.array([f"{self.quantity}_k{k}" for k in range(self.kmax + 1)], dtype=object)


class IrregularityTransformer(TransformerMixin, BaseEstimator):
    """One column: the sum over edges of squared degree differences."""

    def fit(self, X, y=None):
        check_graphs(X)
        self.n_features_out_ = 1
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_out_")
        return np.array([[albertson_irregularity(g)] for g in check_graphs(X)], dtype=object)


class PerronEigen(BaseEstimator):
    """Perron eigenpair of a single connected graph.

    After ``fit`` the estimator exposes ``lambda_``, ``nu_`` (minimum entry 1),
    ``n_iter_``, ``residual_``, ``max_degree_`` and ``crossover_k_`` (``None``
    for regular graphs). ``predict(k)`` returns the spectral upper bound on
    the number of walks of each requested length.
    """

    def __init__(self, tol=1e-12, max_iters=None):
        self.tol = tol
        self.max_iters = max_iters

    def fit(self, X, y=None):
        g = check_graph(X)
        sr = perron(g, tol=self.tol, max_iters=self.max_iters)
        self.graph_ = g
        self.result_ = sr
        self.lambda_ = sr.lam
        self.nu_ = sr.nu
        self.n_iter_ = sr.iterations
        self.residual_ = sr.residual
        self.max_degree_ = g.max_degree
        self.crossover_k_ = crossover_k(g, sr)
        return self

    def predict(self, k):
        check_is_fitted(self, "result_")
        ks = np.atleast_1d(np.asarray(k))
        if ks.ndim != 1 or not np.issubdtype(ks.dtype, np.integer) or np.any(ks < 0):
            raise ValueError("k must be a non-negative integer or 1-d array of them")
        return np.array([spectral_walk_bound(self.graph_, int(x), self.result_) for x in ks])
