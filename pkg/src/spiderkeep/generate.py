"""Seeded random corpora of graphs meeting connectivity and degree floors."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .connectivity import is_k_connected, kappa
from .graph import Graph, add_clique, is_complete, max_degree, min_degree, min_degree_over
from .mader import AnchoredPair, degree_threshold, in_F_k_m_plus

FAMILIES = ("gnp", "glued", "mixed")


@dataclass(frozen=True)
class GeneratorConfig:
    """``family``: "gnp" samples G(n, p); "glued" chains two or three dense
    blocks through separators of k or k+1 vertices, so connectivity sits
    near k and small deletions expose ends; "mixed" alternates between the
    two."""

    n: int
    k: int
    delta_min: int
    apex: bool = False
    count: int = 1
    seed: int = 0
    family: str = "gnp"
    exact_kappa: bool = False
    allow_complete: bool = True
    max_tries: int = 5000

    def validate(self) -> None:
        if self.k < 0 or self.count < 0:
            raise ValueError("k and count must be non-negative")
        if self.n < self.k + 1:
            raise ValueError(f"n={self.n} must be at least k+1={self.k + 1}")
        if not 0 <= self.delta_min <= self.n - 1:
            raise ValueError(f"delta_min={self.delta_min} outside 0..n-1")
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.exact_kappa and self.delta_min == self.n - 1 and self.k < self.n - 1:
            raise ValueError("delta_min = n-1 forces a complete graph, whose connectivity is n-1")
        if self.family == "glued" and not self._glue_side():
            raise ValueError("glued family infeasible: blocks cannot reach delta_min")

    def _glue_side(self) -> int:
        """Smallest block size for the glued family, 0 when infeasible."""
        side = max(1, self.delta_min - self.k + 1)
        return side if self.n - self.k >= 2 * side else 0


def _gnp(cfg: GeneratorConfig, rng: random.Random) -> list[set[int]]:
    n = cfg.n
    lo = min(1.0, cfg.delta_min / max(1, n - 1))
    p = lo + (1.0 - lo) * rng.random() ** 2
    rows: list[set[int]] = [set() for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u].add(v)
                rows[v].add(u)
    return rows


def _chain_layout(cfg: GeneratorConfig, rng: random.Random) -> tuple[list[int], list[int]]:
    """Block and separator sizes for a chain B1 S1 B2 [S2 B3]."""
    n, k = cfg.n, cfg.k
    side = cfg._glue_side()
    for _ in range(20):
        nblocks = rng.choice((2, 2, 3))
        seps = [k + (rng.random() < 0.5) for _ in range(nblocks - 1)]
        free = n - sum(seps)
        if free < nblocks * max(1, side - 1):
            continue
        cuts = sorted(rng.sample(range(1, free), nblocks - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [free])]
        return sizes, seps
    a = rng.randint(side, n - k - side)
    return [a, n - k - a], [k]


def _glued(cfg: GeneratorConfig, rng: random.Random) -> list[set[int]]:
    """Dense blocks chained through separators of size k or k+1.

    Separator vertices are numbered first, so vertex 0 (the apex, when one
    is requested) always sits inside a separator.
    """
    n = cfg.n
    sizes, seps = _chain_layout(cfg, rng)
    sep_sets, nxt = [], 0
    for s in seps:
        sep_sets.append(list(range(nxt, nxt + s)))
        nxt += s
    rows: list[set[int]] = [set() for _ in range(n)]
    for i, size in enumerate(sizes):
        block = list(range(nxt, nxt + size))
        nxt += size
        border = (sep_sets[i - 1] if i > 0 else []) + (sep_sets[i] if i < len(seps) else [])
        zone = border + block
        lo = min(1.0, cfg.delta_min / max(1, len(zone) - 1))
        p = lo + (1.0 - lo) * rng.random() ** 0.5
        for a, u in enumerate(zone):
            for v in zone[a + 1:]:
                if rng.random() < p:
                    rows[u].add(v)
                    rows[v].add(u)
    return rows


def _to_graph(rows: list[set[int]], cfg: GeneratorConfig, rng: random.Random) -> Graph:
    n = cfg.n
    if cfg.apex:
        # the apex must sit inside the separator of glued samples
        a = 0
        for v in range(1, n):
            rows[a].add(v)
            rows[v].add(a)
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u in range(n) for v in rows[u] if u < v])


def accepts(g: Graph, cfg: GeneratorConfig) -> bool:
    if min_degree(g) < cfg.delta_min or not is_k_connected(g, cfg.k):
        return False
    if cfg.apex and max_degree(g) != g.n - 1:
        return False
    if not cfg.allow_complete and is_complete(g):
        return False
    if cfg.exact_kappa and kappa(g) != cfg.k:
        return False
    return True


def generate_corpus(cfg: GeneratorConfig) -> Iterator[Graph]:
    cfg.validate()
    rng = random.Random(cfg.seed)
    glue_ok = bool(cfg._glue_side())
    for _ in range(cfg.count):
        for _attempt in range(cfg.max_tries):
            family = cfg.family
            if family == "mixed":
                family = "glued" if glue_ok and rng.random() < 0.5 else "gnp"
            rows = _glued(cfg, rng) if family == "glued" else _gnp(cfg, rng)
            g = _to_graph(rows, cfg, rng)
            if accepts(g, cfg):
                yield g
                break
        else:
            raise ValueError(f"no graph accepted after {cfg.max_tries} tries; config looks infeasible: {cfg}")


def generate_anchored_pairs(count: int, seed: int, k: int, m: int, n_range: tuple[int, int]) -> Iterator[AnchoredPair]:
    """Random pairs (G, C) in the plus class: G (k+1)-connected, C a k-clique.

    Orders start at m + k + 1 so that deleting an m-vertex path can leave a
    k-connected graph; below that only K_{m+1} with k = 1 qualifies.
    """
    rng = random.Random(seed)
    need = degree_threshold(k, m)
    lo_n = max(n_range[0], need + 1, k + 2, m + k + 1)
    if lo_n > n_range[1]:
        raise ValueError(f"no order in {n_range} admits degree {need}")
    produced = 0
    tries = 0
    while produced < count:
        tries += 1
        if tries > 1000 * max(1, count):
            raise ValueError("anchored pair sampling keeps failing")
        n = rng.randint(lo_n, n_range[1])
        cfg = GeneratorConfig(n=n, k=k + 1, delta_min=0)
        g = _to_graph(_gnp(GeneratorConfig(n=n, k=k, delta_min=need), rng), cfg, rng)
        c = frozenset(rng.sample(range(n), k))
        g = add_clique(g, c)
        low = min_degree_over(g, [v for v in g.vertices if v not in c])
        if low is None or low < need:
            continue
        if in_F_k_m_plus(g, c, k, m):
            produced += 1
            yield AnchoredPair(g, c, k, m)
