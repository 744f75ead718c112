"""Command line interface: ``walkpowers {analyze,generate,verify,spectral,matrix,campaign}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .campaign import CampaignConfig, dump_summary, load_config, run_campaign
from .generators import FAMILIES, RetryBudgetExceeded, generate
from .graph import GraphFormatError, parse_edge_list, serialize_edge_list
from .matrix import MatrixFormatError, parse_matrix, verify_matrix_inequality
from .spectral import IndeterminateCrossover, NotConvergedError, crossover_k, perron
from .verify import analyze, spectral_summary, verify_inequality

log = logging.getLogger("walkpowers")


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _emit(text: str, output: str | None) -> None:
    if output and output != "-":
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def cmd_generate(args) -> int:
    params = {k: getattr(args, k) for k in ("n", "p", "d", "a", "b") if getattr(args, k) is not None}
    g = generate(args.family, args.seed, **params)
    _emit(serialize_edge_list(g), args.output)
    return 0


def cmd_verify(args) -> int:
    g = parse_edge_list(_read_input(args.input))
    report = verify_inequality(g, args.kmax)
    _emit(report.to_csv() if args.format == "csv" else report.to_json(), args.output)
    return 0 if report.ok else 1


def cmd_analyze(args) -> int:
    g = parse_edge_list(_read_input(args.input))
    out = analyze(g, args.kmax, tol=args.tol)
    if args.format == "csv":
        _emit(verify_inequality(g, args.kmax).to_csv(), args.output)
    else:
        _emit(json.dumps(out, indent=2), args.output)
    ok = (
        all(r["match"] and int(r["gap"]) >= 0 for r in out["records"])
        and out["k3"]["match"]
        and out["chain"]["monotone"]
        and out["chain"]["endpoints_match"]
    )
    return 0 if ok else 1


def cmd_spectral(args) -> int:
    g = parse_edge_list(_read_input(args.input))
    sr = perron(g, tol=args.tol)
    out = spectral_summary(g, sr)
    try:
        out["crossover_k"] = crossover_k(g, sr)
    except IndeterminateCrossover as exc:
        out["crossover_k"] = None
        out["crossover_error"] = str(exc)
        _emit(json.dumps(out, indent=2), args.output)
        return 1
    _emit(json.dumps(out, indent=2), args.output)
    return 0


def cmd_matrix(args) -> int:
    m = parse_matrix(_read_input(args.input))
    records = verify_matrix_inequality(m, args.kmax)
    if args.format == "csv":
        lines = ["k,grand_sum,degree_power_sum,holds,equality"]
        for r in records:
            d = r.to_dict()
            cells = (d[c] for c in ("k", "grand_sum", "degree_power_sum", "holds", "equality"))
            lines.append(",".join(str(x).lower() if isinstance(x, bool) else str(x) for x in cells))
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(json.dumps({"n": m.n, "records": [r.to_dict() for r in records]}, indent=2), args.output)
    return 0 if all(r.holds for r in records) else 1


def cmd_campaign(args) -> int:
    cfg = load_config(args.config) if args.config else CampaignConfig()
    summary = run_campaign(cfg, workers=args.workers)
    _emit(dump_summary(summary), args.output)
    log.info("campaign: %d passed, %d failed", summary["total_passed"], summary["total_failed"])
    return 0 if summary["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="walkpowers", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, kmax_default=None, fmt=True):
        p.add_argument("--input", "-i", default="-", help="input file, or '-' for standard input")
        p.add_argument("--output", "-o", default=None, help="output file (default: standard output)")
        if kmax_default is not None:
            p.add_argument("--kmax", "--k", type=int, default=kmax_default, dest="kmax")
        if fmt:
            p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("analyze", help="full report for one graph")
    common(p, kmax_default=6)
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="write a graph of a family as an edge list")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--d", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="walk count versus degree power sum for k = 0..kmax")
    common(p, kmax_default=6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectral", help="Perron pair and crossover k")
    common(p, fmt=False)
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("matrix", help="grand sum of A^k versus absolute row-sum powers")
    common(p, kmax_default=6)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("campaign", help="config-driven verification sweep")
    p.add_argument("--config", "-c", default=None, help="flat key = value file (default: built-in corpus)")
    p.add_argument("--output", "-o", default=None)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_campaign)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (GraphFormatError, MatrixFormatError) as exc:
        print(f"walkpowers: invalid input: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"walkpowers: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RetryBudgetExceeded, NotConvergedError) as exc:
        print(f"walkpowers: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
