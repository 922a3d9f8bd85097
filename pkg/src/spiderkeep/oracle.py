"""Exhaustive reference implementations used to cross-check the fast paths.

Nothing here shares code with the flow-based routines: every answer comes
from enumerating vertex subsets and testing plain connectivity.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, is_connected_within, mask_of


def disconnects(g: Graph, w) -> bool:
    rest = g.full_mask & ~mask_of(w)
    return rest != 0 and not is_connected_within(g.adj, rest)


def brute_kappa(g: Graph) -> int:
    """Smallest |W| with G - W disconnected, or n - 1 if no such W exists."""
    for size in range(g.n - 1):
        for w in combinations(range(g.n), size):
            if disconnects(g, w):
                return size
    return g.n - 1


def brute_is_k_connected(g: Graph, k: int) -> bool:
    return g.n >= k + 1 and brute_kappa(g) >= k


def brute_min_separators(g: Graph) -> list[frozenset[int]]:
    k = brute_kappa(g)
    return [frozenset(w) for w in combinations(range(g.n), k) if disconnects(g, w)]


def brute_local_separator(g: Graph, u: int, v: int) -> int:
    """Size of a smallest vertex set (avoiding u, v) separating non-adjacent u and v."""
    if g.has_edge(u, v):
        raise ValueError("u and v are adjacent; no separator exists")
    others = [x for x in range(g.n) if x not in (u, v)]
    for size in range(len(others) + 1):
        for w in combinations(others, size):
            alive = g.full_mask & ~mask_of(w)
            # u, v in different components of G - W
            seen = 1 << u
            frontier = seen
            while frontier:
                nxt = 0
                x = frontier
                while x:
                    low = x & -x
                    nxt |= g.adj[low.bit_length() - 1]
                    x ^= low
                nxt &= alive & ~seen
                seen |= nxt
                frontier = nxt
            if not seen >> v & 1:
                return size
    raise AssertionError("unreachable: removing all other vertices separates u and v")
