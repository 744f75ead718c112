"""Per-graph verification reports for the walk/degree-power inequality.

Reports serialize big integers as decimal strings so no precision is lost.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

from .degrees import albertson_irregularity, degree_power_sum
from .graph import Graph, components_regular, is_connected, is_regular
from .spectral import (
    IndeterminateCrossover,
    NotConvergedError,
    SpectralResult,
    crossover_k,
    perron,
    spectral_walk_bound,
)
from .walks import adjacency_apply, mixed_walk_sum, total_walks

RECORD_FIELDS = ("k", "walks", "degree_power_sum", "gap", "equality", "predicted_equality", "match")


@dataclass(frozen=True)
class WalkRecord:
    k: int
    walks: int
    degree_power_sum: int
    gap: int
    equality: bool
    predicted_equality: bool
    match: bool

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "walks": str(self.walks),
            "degree_power_sum": str(self.degree_power_sum),
            "gap": str(self.gap),
            "equality": self.equality,
            "predicted_equality": self.predicted_equality,
            "match": self.match,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "WalkRecord":
        return cls(
            k=int(d["k"]),
            walks=int(d["walks"]),
            degree_power_sum=int(d["degree_power_sum"]),
            gap=int(d["gap"]),
            equality=bool(d["equality"]),
            predicted_equality=bool(d["predicted_equality"]),
            match=bool(d["match"]),
        )


@dataclass(frozen=True)
class WalkReport:
    """Header plus one record per ``k``.

    ``extrapolated`` marks disconnected inputs, whose predicted equality uses
    the per-component regularity rule.
    """

    n: int
    m: int
    regular: bool
    connected: bool
    extrapolated: bool
    records: tuple[WalkRecord, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return all(r.match and r.gap >= 0 for r in self.records)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "regular": self.regular,
            "connected": self.connected,
            "extrapolated": self.extrapolated,
            "records": [r.to_dict() for r in self.records],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "WalkReport":
        return cls(
            n=int(d["n"]),
            m=int(d["m"]),
            regular=bool(d["regular"]),
            connected=bool(d["connected"]),
            extrapolated=bool(d["extrapolated"]),
            records=tuple(WalkRecord.from_dict(r) for r in d["records"]),
        )

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "WalkReport":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=RECORD_FIELDS, lineterminator="\n")
        writer.writeheader()
        for r in self.records:
            writer.writerow({k: str(v).lower() if isinstance(v, bool) else v for k, v in r.to_dict().items()})
        return buf.getvalue()


def predicted_equality(k: int, regular: bool) -> bool:
    """Equality holds exactly when ``k <= 2`` or the graph is regular."""
    return k <= 2 or regular


def verify_inequality(g: Graph, kmax: int) -> WalkReport:
    """Compare walk counts with degree power sums for ``k = 0..kmax``."""
    if kmax < 1:
        raise ValueError(f"kmax must be >= 1, got {kmax}")
    connected = is_connected(g)
    regular = is_regular(g) is not None
    # Walks and gaps add over components, so equality needs every component regular.
    equality_regular = regular if connected else components_regular(g)

    records = []
    x = [1] * g.n
    for k in range(kmax + 1):
        if k:
            x = adjacency_apply(g, x)
        w = sum(x)
        dk = degree_power_sum(g, k)
        gap = dk - w
        eq = gap == 0
        pred = predicted_equality(k, equality_regular)
        records.append(WalkRecord(k, w, dk, gap, eq, pred, eq == pred))
    return WalkReport(g.n, g.m, regular, connected, not connected, tuple(records))


@dataclass(frozen=True)
class K3Record:
    gap: int
    irregularity: int

    @property
    def match(self) -> bool:
        return self.gap == self.irregularity

    def to_dict(self) -> dict:
        return {"gap": str(self.gap), "irregularity": str(self.irregularity), "match": self.match}


def verify_k3(g: Graph) -> K3Record:
    """Check that the k=3 gap equals the Laplacian form evaluated at the degree vector."""
    return K3Record(degree_power_sum(g, 3) - total_walks(g, 3), albertson_irregularity(g))


@dataclass(frozen=True)
class ChainRecord:
    k: int
    terms: tuple[int, ...]
    walks: int
    degree_power_sum: int

    @property
    def monotone(self) -> bool:
        return all(a <= b for a, b in zip(self.terms, self.terms[1:]))

    @property
    def endpoints_match(self) -> bool:
        return self.terms[0] == self.walks and self.terms[-1] == self.degree_power_sum

    @property
    def ok(self) -> bool:
        return self.monotone and self.endpoints_match

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "terms": [str(t) for t in self.terms],
            "monotone": self.monotone,
            "endpoints_match": self.endpoints_match,
        }


def verify_chain(g: Graph, k: int) -> ChainRecord:
    """Terms ``T_m = <j, A^(k-m) D^m j>`` for ``m = 1..k``, which should be non-decreasing."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    terms = tuple(mixed_walk_sum(g, k - m, m) for m in range(1, k + 1))
    return ChainRecord(k, terms, total_walks(g, k), degree_power_sum(g, k))


def analyze(g: Graph, kmax: int, tol: float = 1e-12) -> dict:
    """Full JSON-ready report: inequality records, k=3 identity, proof chain, spectral data."""
    report = verify_inequality(g, kmax)
    out = report.to_dict()
    out["k3"] = verify_k3(g).to_dict()
    out["chain"] = verify_chain(g, kmax).to_dict()
    if report.connected and g.m > 0:
        try:
            sr = perron(g, tol=tol)
        except NotConvergedError as exc:
            out["spectral"] = {"error": str(exc)}
        else:
            out["spectral"] = spectral_summary(g, sr)
            try:
                out["spectral"]["crossover_k"] = crossover_k(g, sr)
            except IndeterminateCrossover as exc:
                out["spectral"]["crossover_k"] = None
                out["spectral"]["crossover_error"] = str(exc)
            bounds = (spectral_walk_bound(g, k, sr) for k in range(kmax + 1))
            out["spectral"]["bounds"] = [b if math.isfinite(b) else None for b in bounds]
    else:
        out["spectral"] = None
    return out


def spectral_summary(g: Graph, sr: SpectralResult) -> dict:
    return {
        "lambda": sr.lam,
        "nu": [float(v) for v in sr.nu],
        "nu_norm_sq": sr.nu_norm_sq,
        "max_degree": g.max_degree,
        "iterations": sr.iterations,
        "residual": sr.residual,
    }


__all__ = [
    "WalkRecord",
    "WalkReport",
    "K3Record",
    "ChainRecord",
    "verify_inequality",
    "verify_k3",
    "verify_chain",
    "analyze",
    "predicted_equality",
]
