#!/usr/bin/env python3
"""Build the small-graph corpora under tests/data.

connected_le8.g6   every connected graph on 1..8 vertices, one per isomorphism class
random9.g6         seeded sample of 9-vertex graphs with minimum degree >= 3

Orders up to 7 come from the networkx graph atlas. Order 8 is obtained by
adding a vertex to every 7-vertex graph in every possible way and keeping
one graph per nauty certificate (needs pynauty).

Usage:
    python scripts/make_corpus.py [--out tests/data]
"""

from __future__ import annotations

import argparse
from pathlib import Path

import networkx as nx

from spiderkeep.generate import GeneratorConfig, generate_corpus
from spiderkeep.graph import Graph, is_connected, iter_bits
from spiderkeep.io import emit_graph6


def atlas_by_order() -> dict[int, list[Graph]]:
    out: dict[int, list[Graph]] = {}
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n == 0:
            continue
        out.setdefault(n, []).append(Graph.from_edges(n, h.edges()))
    return out


def extend_by_one(graphs: list[Graph]) -> list[Graph]:
    import pynauty

    seen = {}
    for g in graphs:
        n = g.n
        for nbrs in range(1 << n):
            rows = list(g.adj) + [nbrs]
            for v in iter_bits(nbrs):
                rows[v] |= 1 << n
            h = Graph(n + 1, tuple(rows))
            cert = pynauty.certificate(
                pynauty.Graph(n + 1, adjacency_dict={v: list(iter_bits(h.adj[v])) for v in range(n + 1)})
            )
            seen.setdefault(cert, h)
    return list(seen.values())


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", default="tests/data")
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    by_order = atlas_by_order()
    by_order[8] = extend_by_one(by_order[7])
    lines = []
    for n in sorted(by_order):
        conn = [g for g in by_order[n] if is_connected(g)]
        lines += sorted(emit_graph6(g) for g in conn)
        print(f"n={n}: {len(by_order[n])} graphs, {len(conn)} connected")
    (out / "connected_le8.g6").write_text("".join(s + "\n" for s in lines))

    sample = []
    for k, count in ((1, 150), (2, 150)):
        cfg = GeneratorConfig(n=9, k=k, delta_min=3, count=count, seed=args.seed + k, family="mixed")
        sample += [emit_graph6(g) for g in generate_corpus(cfg)]
    (out / "random9.g6").write_text("".join(s + "\n" for s in sample))
    print(f"random9: {len(sample)} graphs")


if __name__ == "__main__":
    main()
