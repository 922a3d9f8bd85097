#!/usr/bin/env python3
"""Structural checks on graphs whose connectivity is exactly k.

For each sampled graph: every end F with |F| >= 2 must make G[S] - V(F-bar)
(k+1)-connected, and every separator/fragment pair must keep G[S] - V(F)
k-connected. Prints counts and any failing graph6 strings.

Usage:
    python scripts/lemma_sweep.py --count 100 --n-max 12
"""

from __future__ import annotations

import argparse
import random
import sys

from spiderkeep.generate import GeneratorConfig, generate_corpus
from spiderkeep.io import emit_graph6
from spiderkeep.mader import lemma_sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--ks", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--count", type=int, default=100, help="graphs per k")
    ap.add_argument("--n-max", type=int, default=12)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    bad = 0
    for k in args.ks:
        failures = []
        for _ in range(args.count):
            cfg = GeneratorConfig(n=rng.randint(k + 4, args.n_max), k=k, delta_min=k,
                                  seed=rng.randrange(2**32), family=rng.choice(("gnp", "glued")),
                                  exact_kappa=True, allow_complete=False)
            for g in generate_corpus(cfg):
                if lemma_sweep(g):
                    failures.append(emit_graph6(g))
        print(f"k={k}: {args.count} graphs, {len(failures)} with violations")
        for g6 in failures:
            print(f"  {g6}")
        bad += len(failures)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
