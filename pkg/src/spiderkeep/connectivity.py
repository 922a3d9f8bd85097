"""Vertex connectivity, minimum separating sets, fragments and ends.

Connectivity is computed with unit-capacity max-flow on the vertex-split
digraph. ``kappa`` pairs a minimum-degree vertex against its non-neighbours
and sweeps non-adjacent pairs of its neighbours (Esfahanian-Hakimi), which
covers both the case where that vertex avoids some minimum cut and the
case where it lies in all of them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import (
    Graph,
    component_masks,
    is_complete,
    is_connected,
    iter_bits,
    mask_of,
    set_of,
)

MAX_COMPONENTS = 12


class NotSeparableError(ValueError):
    """Raised for complete graphs, which have no separating set."""


class FragmentOverflowError(ValueError):
    """G - S has more components than the union enumeration supports."""


def _max_disjoint_paths(adj, n: int, s: int, t: int, limit: int, skip_edge: bool = False) -> int:
    """Internally vertex-disjoint s,t-paths, counted up to ``limit``.

    Node 2v is v_in, 2v+1 is v_out. The direct edge st is dropped when
    ``skip_edge`` is set.
    """
    size = 2 * n
    head = [-1] * size
    to: list[int] = []
    cap: list[int] = []
    nxt: list[int] = []

    def arc(a: int, b: int, c: int) -> None:
        to.append(b); cap.append(c); nxt.append(head[a]); head[a] = len(to) - 1
        to.append(a); cap.append(0); nxt.append(head[b]); head[b] = len(to) - 1

    big = n + 1
    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u in range(n):
        for v in iter_bits(adj[u]):
            if skip_edge and {u, v} == {s, t}:
                continue
            arc(2 * u + 1, 2 * v, 1)

    src, snk = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        prev = [-1] * size
        prev[src] = -2
        queue = deque([src])
        found = False
        while queue and not found:
            a = queue.popleft()
            e = head[a]
            while e != -1:
                b = to[e]
                if cap[e] > 0 and prev[b] == -1:
                    prev[b] = e
                    if b == snk:
                        found = True
                        break
                    queue.append(b)
                e = nxt[e]
        if not found:
            break
        b = snk
        while b != src:
            e = prev[b]
            cap[e] -= 1
            cap[e ^ 1] += 1
            b = to[e ^ 1]
        flow += 1
    return flow


def local_kappa(g: Graph, u: int, v: int, limit: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint u,v-paths."""
    if u == v:
        raise ValueError("local connectivity needs two distinct vertices")
    g._check_vertex(u)
    g._check_vertex(v)
    cap = g.n if limit is None else limit
    if g.has_edge(u, v):
        if cap <= 0:
            return 0
        return 1 + _max_disjoint_paths(g.adj, g.n, u, v, cap - 1, skip_edge=True)
    return _max_disjoint_paths(g.adj, g.n, u, v, cap)


def _kappa_bounded(g: Graph, bound: int) -> int:
    """min(kappa(g), bound) for a connected, non-complete g."""
    v = min(g.vertices, key=lambda x: (g.adj[x].bit_count(), x))
    best = min(bound, g.adj[v].bit_count())
    for w in iter_bits(g.full_mask & ~g.adj[v] & ~(1 << v)):
        if best == 0:
            return 0
        best = min(best, _max_disjoint_paths(g.adj, g.n, v, w, best))
    nbrs = list(iter_bits(g.adj[v]))
    for x, y in combinations(nbrs, 2):
        if best == 0:
            return 0
        if not g.adj[x] >> y & 1:
            best = min(best, _max_disjoint_paths(g.adj, g.n, x, y, best))
    return best


def kappa(g: Graph) -> int:
    """Vertex connectivity, with kappa(K_n) = n - 1."""
    if is_complete(g):
        return g.n - 1
    if not is_connected(g):
        return 0
    return _kappa_bounded(g, g.n)


def is_k_connected(g: Graph, k: int) -> bool:
    if k < 0:
        raise ValueError("k must be non-negative")
    if g.n < k + 1:
        return False
    if k == 0:
        return True
    if is_complete(g):
        return True
    if min(row.bit_count() for row in g.adj) < k or not is_connected(g):
        return False
    return _kappa_bounded(g, k) >= k


def is_separator(g: Graph, s) -> bool:
    rest = g.full_mask & ~mask_of(s)
    return len(component_masks(g.adj, rest)) >= 2


def minimum_separators(g: Graph) -> list[frozenset[int]]:
    """All separating sets of size kappa(g), by exhaustive enumeration."""
    if is_complete(g):
        raise NotSeparableError("complete graphs have no separating set")
    k = kappa(g)
    full = g.full_mask
    out = []
    for combo in combinations(range(g.n), k):
        rest = full & ~mask_of(combo)
        if len(component_masks(g.adj, rest)) >= 2:
            out.append(frozenset(combo))
    return out


def _fragment_masks(g: Graph, smask: int) -> list[int]:
    comps = component_masks(g.adj, g.full_mask & ~smask)
    if len(comps) < 2:
        raise ValueError(f"{sorted(iter_bits(smask))} does not separate the graph")
    if len(comps) > MAX_COMPONENTS:
        raise FragmentOverflowError(
            f"G - S has {len(comps)} components; at most {MAX_COMPONENTS} are supported"
        )
    frags = []
    for pick in range(1, (1 << len(comps)) - 1):
        f = 0
        for i, c in enumerate(comps):
            if pick >> i & 1:
                f |= c
        nb = 0
        for x in iter_bits(f):
            nb |= g.adj[x]
        if nb & ~f == smask:
            frags.append(f)
    return frags


def fragments_to(g: Graph, s) -> list[frozenset[int]]:
    """Unions of components F of G - S with G - S - F nonempty and N(F) = S."""
    return [set_of(f) for f in _fragment_masks(g, mask_of(s))]


@dataclass(frozen=True)
class SeparatorDecomposition:
    separator: frozenset[int]
    fragments: tuple[frozenset[int], ...]
    end_flags: tuple[bool, ...]

    def complement(self, f: frozenset[int], n: int) -> frozenset[int]:
        return frozenset(range(n)) - self.separator - f


def decompose(g: Graph) -> list[SeparatorDecomposition]:
    """Every minimum separator with its fragments, flagged as ends or not."""
    seps = minimum_separators(g)
    per_sep = [(mask_of(s), _fragment_masks(g, mask_of(s))) for s in seps]
    all_frags = {f for _, fs in per_sep for f in fs}

    def is_end(f: int) -> bool:
        return not any(o != f and o & f == o for o in all_frags)

    return [
        SeparatorDecomposition(
            separator=set_of(sm),
            fragments=tuple(set_of(f) for f in fs),
            end_flags=tuple(is_end(f) for f in fs),
        )
        for sm, fs in per_sep
    ]


def ends(g: Graph) -> list[tuple[frozenset[int], frozenset[int]]]:
    """All ends as (separator, end) pairs, smallest end first, ties lexicographic."""
    found = {}
    for dec in decompose(g):
        for f, flag in zip(dec.fragments, dec.end_flags):
            if flag:
                found[f] = dec.separator
    return sorted(((s, f) for f, s in found.items()), key=lambda p: (len(p[1]), sorted(p[1])))
