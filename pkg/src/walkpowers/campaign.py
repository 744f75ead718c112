"""Config-driven verification sweeps over graph corpora and random matrix ensembles."""

from __future__ import annotations

import json
import logging
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Iterator, Optional, Union

from .degrees import albertson_irregularity, power_lemma_gap
from .generators import FAMILIES, generate
from .graph import Graph, degree_vector, is_connected, is_regular, parse_edge_list
from .matrix import abs_row_sums, adjacency_matrix, random_symmetric_matrix, verify_matrix_inequality
from .oracle import OracleCap, brute_force_walks
from .spectral import (
    IndeterminateCrossover,
    NotConvergedError,
    bound_below_max_degree_power,
    crossover_k,
    perron,
    spectral_walk_bound,
)
from .verify import verify_chain, verify_inequality, verify_k3
from .walks import total_walks

logger = logging.getLogger(__name__)


@dataclass
class CampaignConfig:
    families: tuple[str, ...] = FAMILIES
    n_min: int = 1
    n_max: int = 12
    p: tuple[float, ...] = (0.2, 0.5, 0.8)
    seeds: tuple[int, ...] = tuple(range(50))
    degrees: tuple[int, ...] = (2, 3, 4)
    regular_seeds: tuple[int, ...] = tuple(range(10))
    kmax: int = 12
    chain_kmax: int = 8
    oracle_n_max: int = 7
    oracle_kmax: int = 6
    spectral_kmax: int = 20
    tol: float = 1e-12
    matrix_count: int = 1000
    matrix_n_max: int = 6
    matrix_kmax: int = 8
    matrix_max_num: int = 3
    matrix_max_den: int = 3
    matrix_seed: int = 0
    lemma_count: int = 10_000
    lemma_max_base: int = 10**6
    lemma_max_r: int = 20
    lemma_seed: int = 0
    workers: int = 1
    inputs: tuple[str, ...] = ()


_TUPLE_TYPES = {
    "families": str,
    "p": float,
    "seeds": int,
    "degrees": int,
    "regular_seeds": int,
    "inputs": str,
}


def _parse_list(value: str, cast) -> tuple:
    items = []
    for part in value.split(","):
        part = part.strip()
        if not part:
            continue
        if cast is int and ".." in part:
            lo, hi = part.split("..")
            items.extend(range(int(lo), int(hi) + 1))
        else:
            items.append(cast(part))
    return tuple(items)


def parse_config(text: str) -> CampaignConfig:
    """Read ``key = value`` lines; lists are comma separated, ``a..b`` is an inclusive int range."""
    known = {f.name: f for f in fields(CampaignConfig)}
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or key not in known:
            raise ValueError(f"config line {lineno}: unknown or malformed entry {raw.strip()!r}")
        try:
            if key in _TUPLE_TYPES:
                values[key] = _parse_list(value, _TUPLE_TYPES[key])
            elif key == "tol":
                values[key] = float(value)
            else:
                values[key] = int(value)
        except ValueError:
            raise ValueError(f"config line {lineno}: bad value for {key}: {value!r}") from None
    cfg = CampaignConfig(**values)
    unknown = set(cfg.families) - set(FAMILIES)
    if unknown:
        raise ValueError(f"unknown families in config: {', '.join(sorted(unknown))}")
    return cfg


def load_config(path: Union[str, Path]) -> CampaignConfig:
    return parse_config(Path(path).read_text())


def iter_corpus(cfg: CampaignConfig) -> Iterator[tuple[str, Graph]]:
    """Deterministic (label, graph) pairs in a fixed order."""
    for path in cfg.inputs:
        yield f"file:{path}", parse_edge_list(Path(path).read_bytes())
    ns = range(cfg.n_min, cfg.n_max + 1)
    for family in cfg.families:
        if family in ("path", "complete"):
            for n in ns:
                yield f"{family}(n={n})", generate(family, n=n)
        elif family == "cycle":
            for n in ns:
                if n >= 3:
                    yield f"cycle(n={n})", generate(family, n=n)
        elif family == "star":
            for n in ns:
                if n >= 2:
                    yield f"star(n={n})", generate(family, n=n)
        elif family == "complete_bipartite":
            for n in ns:
                for a in range(1, n // 2 + 1):
                    yield f"complete_bipartite(a={a},b={n - a})", generate(family, a=a, b=n - a)
        elif family == "random_connected":
            for p in cfg.p:
                for n in ns:
                    for s in cfg.seeds:
                        yield f"random_connected(n={n},p={p},seed={s})", generate(family, s, n=n, p=p)
        elif family == "random_regular":
            for d in cfg.degrees:
                for n in ns:
                    if d < n and (n * d) % 2 == 0:
                        for s in cfg.regular_seeds:
                            yield f"random_regular(n={n},d={d},seed={s})", generate(family, s, n=n, d=d)


def build_corpus(cfg: CampaignConfig) -> list[tuple[str, Graph]]:
    return list(iter_corpus(cfg))


@dataclass
class CheckTally:
    passed: Counter = field(default_factory=Counter)
    failed: Counter = field(default_factory=Counter)
    failures: list = field(default_factory=list)

    def record(self, check: str, ok: bool, detail: str = "") -> None:
        if ok:
            self.passed[check] += 1
        else:
            self.failed[check] += 1
            self.failures.append(f"{check}: {detail}")

    def merge(self, other: "CheckTally") -> None:
        self.passed.update(other.passed)
        self.failed.update(other.failed)
        self.failures.extend(other.failures)

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_dict(self) -> dict:
        names = sorted(set(self.passed) | set(self.failed))
        return {
            "ok": self.ok,
            "checks": {c: {"passed": self.passed[c], "failed": self.failed[c]} for c in names},
            "total_passed": sum(self.passed.values()),
            "total_failed": sum(self.failed.values()),
            "failures": list(self.failures),
        }


def check_graph(label: str, g: Graph, cfg: CampaignConfig) -> CheckTally:
    """Run every graph-level check on one corpus item."""
    t = CheckTally()
    report = verify_inequality(g, cfg.kmax)
    irr = albertson_irregularity(g)
    reg = is_regular(g)

    for r in report.records:
        t.record("inequality", r.gap >= 0, f"{label} k={r.k} gap={r.gap}")
        name = "equality" if report.connected else "equality_extrapolated"
        t.record(name, r.match, f"{label} k={r.k} equality={r.equality} predicted={r.predicted_equality}")
        if reg is not None:
            t.record("regular_identity", r.walks == g.n * reg**r.k, f"{label} k={r.k}")

    k3 = verify_k3(g)
    t.record("k3_identity", k3.match, f"{label} gap={k3.gap} irregularity={k3.irregularity}")

    if g.n <= cfg.oracle_n_max:
        cap = OracleCap(n=cfg.oracle_n_max, k=cfg.oracle_kmax)
        for k in range(cfg.oracle_kmax + 1):
            w = report_walks(report, g, k)
            t.record("oracle", w == brute_force_walks(g, k, cap), f"{label} k={k}")

    for k in range(1, cfg.chain_kmax + 1):
        ch = verify_chain(g, k)
        t.record("chain", ch.ok, f"{label} k={k} terms={ch.terms}")
        if k >= 3:
            all_equal = len(set(ch.terms)) == 1
            t.record("chain_equality", all_equal == (irr == 0), f"{label} k={k} irregularity={irr}")

    m = adjacency_matrix(g)
    t.record("matrix_degrees", abs_row_sums(m) == degree_vector(g), label)
    for rec in verify_matrix_inequality(m, cfg.matrix_kmax):
        t.record("matrix_consistency", rec.grand_sum == report_walks(report, g, rec.k), f"{label} k={rec.k}")

    if report.connected and g.m > 0:
        _check_spectral(label, g, cfg, t)
    return t


def report_walks(report, g: Graph, k: int) -> int:
    return report.records[k].walks if k < len(report.records) else total_walks(g, k)


def _check_spectral(label: str, g: Graph, cfg: CampaignConfig, t: CheckTally) -> None:
    try:
        sr = perron(g, tol=cfg.tol)
    except NotConvergedError as exc:
        t.record("spectral_converged", False, f"{label}: {exc}")
        return
    t.record("spectral_converged", sr.residual <= cfg.tol, f"{label} residual={sr.residual}")
    delta = g.max_degree
    regular = is_regular(g) is not None
    t.record("lambda_le_delta", sr.lam <= delta * (1 + 1e-9), f"{label} lambda={sr.lam} delta={delta}")
    if not regular:
        t.record("lambda_lt_delta", sr.lam <= delta - 1e-6, f"{label} lambda={sr.lam} delta={delta}")
    for k in range(cfg.spectral_kmax + 1):
        w = float(total_walks(g, k))
        bound = spectral_walk_bound(g, k, sr)
        t.record("sandwich", w <= bound * (1 + 1e-6), f"{label} k={k} walks={w} bound={bound}")
    try:
        kc = crossover_k(g, sr)
    except IndeterminateCrossover as exc:
        t.record("crossover", False, f"{label}: {exc}")
        return
    if kc is None:
        t.record("crossover", regular, f"{label} no crossover on non-regular graph")
        return
    ok = all(bound_below_max_degree_power(sr, k, delta) for k in range(kc, kc + 11))
    ok = ok and (kc == 1 or not bound_below_max_degree_power(sr, kc - 1, delta))
    t.record("crossover", ok, f"{label} crossover={kc}")


def check_matrices(cfg: CampaignConfig) -> CheckTally:
    t = CheckTally()
    rng = random.Random(cfg.matrix_seed)
    for idx in range(cfg.matrix_count):
        n = rng.randint(1, cfg.matrix_n_max)
        m = random_symmetric_matrix(n, rng, cfg.matrix_max_num, cfg.matrix_max_den)
        recs = verify_matrix_inequality(m, cfg.matrix_kmax)
        for rec in recs:
            t.record("matrix_inequality", rec.holds, f"matrix#{idx} k={rec.k} {rec.grand_sum} > {rec.degree_power_sum}")
        nonneg = all(x >= 0 for row in m.entries for x in row)
        t.record("matrix_k1_sign", recs[0].holds and recs[0].equality == nonneg, f"matrix#{idx}")
    return t


def check_lemma(cfg: CampaignConfig) -> CheckTally:
    t = CheckTally()
    rng = random.Random(cfg.lemma_seed)
    for _ in range(cfg.lemma_count):
        a = rng.randint(0, cfg.lemma_max_base)
        b = rng.randint(0, cfg.lemma_max_base)
        if rng.random() < 0.1:
            b = a
        r = rng.randint(1, cfg.lemma_max_r)
        gap = power_lemma_gap(a, b, r)
        t.record("lemma_identity", a**r * b + a * b**r + gap == a ** (r + 1) + b ** (r + 1), f"a={a} b={b} r={r}")
        if a >= 1 and b >= 1:
            t.record("lemma_equality", (gap == 0) == (a == b), f"a={a} b={b} r={r}")
        t.record("lemma_nonnegative", gap >= 0, f"a={a} b={b} r={r}")
    return t


def _check_item(args):
    label, g, cfg = args
    return check_graph(label, g, cfg)


def run_campaign(cfg: CampaignConfig, workers: Optional[int] = None) -> dict:
    """Run all checks; the returned summary has ``ok`` False if anything failed.

    Results are merged in corpus order regardless of worker count.
    """
    workers = cfg.workers if workers is None else workers
    corpus = build_corpus(cfg)
    logger.info("campaign: %d graphs, %d matrices", len(corpus), cfg.matrix_count)
    tally = CheckTally()
    items = [(label, g, cfg) for label, g in corpus]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_item, items, chunksize=16))
    else:
        results = [_check_item(it) for it in items]
    for res in results:
        tally.merge(res)
    tally.merge(check_matrices(cfg))
    tally.merge(check_lemma(cfg))
    summary = tally.to_dict()
    summary["graphs"] = len(corpus)
    summary["connected_graphs"] = sum(1 for _, g in corpus if is_connected(g))
    summary["matrices"] = cfg.matrix_count
    return summary


def dump_summary(summary: dict) -> str:
    return json.dumps(summary, indent=2)
