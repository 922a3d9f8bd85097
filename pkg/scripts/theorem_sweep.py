#!/usr/bin/env python3
"""Seeded sweep of the spider theorem over random apex graphs.

Every (k, m, t) cell gets its own report; the JSON written to --out is
byte-identical across reruns with the same arguments.

Usage:
    python scripts/theorem_sweep.py --seed 2024 --per-cell 200 --out sweep.json
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from spiderkeep import harness


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--ks", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--ms", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--per-cell", type=int, default=200)
    ap.add_argument("--n-max", type=int, default=14)
    ap.add_argument("--method", choices=["brute", "constructive", "both"], default="both")
    ap.add_argument("--workers", type=int, default=None)
    ap.add_argument("--out", help="write the JSON report here")
    args = ap.parse_args()

    t0 = time.perf_counter()
    reports = harness.theorem_sweep(args.seed, tuple(args.ks), tuple(args.ms), args.per_cell,
                                    args.n_max, args.method, args.workers)
    elapsed = time.perf_counter() - t0

    print(f"{'k':>2} {'m':>2} {'t':>2} {'met':>5} {'ok':>5} {'fail':>4} {'claims':>6} {'fallback':>8}")
    for r in reports:
        p = r.parameters
        print(f"{p['k']:>2} {p['m']:>2} {p['t']:>2} {r.hypotheses_met:>5} {r.successes:>5} "
              f"{len(r.failures):>4} {len(r.claim_failures):>6} {r.fallbacks:>8}")
    print(f"{elapsed:.1f}s")
    if args.out:
        Path(args.out).write_text(harness.sweep_json(reports), encoding="utf-8")
    return max((r.exit_code for r in reports), default=0)


if __name__ == "__main__":
    sys.exit(main())
