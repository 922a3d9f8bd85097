"""Command-line entry point.

Exit codes: 0 all checks pass, 1 counterexample found, 2 usage or input
error, 3 an internal claim check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import harness
from .connectivity import ends, kappa
from .construct import HypothesisError, find_keeping_spider_constructive, theorem_hypotheses
from .generate import FAMILIES, GeneratorConfig, generate_corpus
from .graph import is_complete
from .io import FormatError, emit_graph6, read_graphs, write_graphs
from .spider import find_keeping_spider_bruteforce


def _fmt_set(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def _read(args) -> list:
    return read_graphs(args.file, args.format)


def cmd_kappa(args) -> int:
    for g in _read(args):
        print(f"{emit_graph6(g)}\t{kappa(g)}")
    return harness.EXIT_OK


def cmd_ends(args) -> int:
    for g in _read(args):
        if is_complete(g):
            print(f"{emit_graph6(g)}\tcomplete")
            continue
        parts = [f"S={_fmt_set(s)} E={_fmt_set(e)}" for s, e in ends(g)]
        print(f"{emit_graph6(g)}\t" + "; ".join(parts))
    return harness.EXIT_OK


def cmd_find_spider(args) -> int:
    code = harness.EXIT_OK
    for g in _read(args):
        g6 = emit_graph6(g)
        met = all(theorem_hypotheses(g, args.k, args.t, args.m, args.strict).values())
        found = []
        if args.method in ("brute", "both"):
            emb = None
            if args.m < g.n:
                emb = find_keeping_spider_bruteforce(g, args.k, args.t, args.m, root=args.root, strict=args.strict)
            found.append(emb is not None)
            print(f"{g6}\tbrute\t{json.dumps(emb.to_dict()) if emb else 'none'}")
        if args.method in ("constructive", "both"):
            try:
                res = find_keeping_spider_constructive(g, args.k, args.t, args.m, strict=args.strict)
            except HypothesisError as exc:
                print(f"{g6}\tconstructive\t{exc}")
            else:
                if res.claim_failures:
                    code = max(code, harness.EXIT_CLAIM)
                tag = "constructive" + (" (fallback)" if res.fallback_used else "")
                found.append(res.embedding is not None)
                print(f"{g6}\t{tag}\t{json.dumps(res.embedding.to_dict()) if res.embedding else 'none'}")
        if met and not any(found):
            code = harness.EXIT_COUNTEREXAMPLE
    return code


def _emit(report: harness.VerificationReport, args) -> int:
    if args.report:
        Path(args.report).write_text(harness.emit_report(report, "json"), encoding="utf-8")
    sys.stdout.write(harness.emit_report(report, "json" if args.json else "table"))
    return report.exit_code


def cmd_verify(args) -> int:
    report = harness.verify_corpus(_read(args), args.k, args.m, args.t, method=args.method,
                                   strict=args.strict, workers=args.workers, timings=args.timings)
    return _emit(report, args)


def cmd_check(args) -> int:
    m = args.m if args.m is not None else (3 if args.suite == "diwan-tholiya" else 1)
    report = harness.run_suite(args.suite, _read(args), args.k, m, workers=args.workers, timings=args.timings)
    return _emit(report, args)


def cmd_gen(args) -> int:
    cfg = GeneratorConfig(n=args.n, k=args.k, delta_min=args.delta, apex=args.apex, count=args.count,
                          seed=args.seed, family=args.family, exact_kappa=args.exact_kappa)
    text = write_graphs(generate_corpus(cfg), args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return harness.EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spiderkeep", description="Connectivity-keeping spiders in k-connected graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("file", help="graph6 (.g6) or edge-list (.edges) file")
        sp.add_argument("--format", choices=["g6", "edges"], help="override format sniffed from the extension")
        return sp

    def with_report(sp):
        sp.add_argument("--report", help="also write the JSON report here")
        sp.add_argument("--json", action="store_true", help="print JSON instead of a table")
        sp.add_argument("--timings", action="store_true", help="record wall time per phase")
        sp.add_argument("--workers", type=int, default=None, help=f"worker processes (default: ${harness.WORKERS_ENV} or CPU count)")
        return sp

    sp = with_input(sub.add_parser("kappa", help="vertex connectivity of each graph"))
    sp.set_defaults(func=cmd_kappa)

    sp = with_input(sub.add_parser("ends", help="ends and their separators"))
    sp.set_defaults(func=cmd_ends)

    def spider_params(sp):
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--t", type=int, required=True)
        sp.add_argument("--method", choices=["brute", "constructive", "both"], default="both")
        sp.add_argument("--strict", action="store_true", help="reject stars with three or more leaves")

    sp = with_input(sub.add_parser("find-spider", help="find a connectivity-keeping spider"))
    spider_params(sp)
    sp.add_argument("--root", type=int, default=None, help="fix the root (brute-force method only)")
    sp.set_defaults(func=cmd_find_spider)

    sp = with_report(with_input(sub.add_parser("verify", help="verify the spider theorem over a corpus")))
    spider_params(sp)
    sp.set_defaults(func=cmd_verify)

    sp = with_report(with_input(sub.add_parser("check", help="check a prior result over a corpus")))
    sp.add_argument("--suite", choices=harness.SUITES, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--m", type=int, default=None, help="path order, or maximum tree order for diwan-tholiya")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("gen", help="generate a seeded random corpus")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--delta", type=int, required=True)
    sp.add_argument("--apex", action="store_true")
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--family", choices=FAMILIES, default="gnp")
    sp.add_argument("--exact-kappa", action="store_true", help="keep only graphs with connectivity exactly k")
    sp.add_argument("--format", choices=["g6", "edges"], default="g6")
    sp.add_argument("--out", help="write here instead of stdout")
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return harness.EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
