"""Immutable simple graphs on dense integer labels.

Adjacency is kept as one neighbour bitmask per vertex, which keeps set
operations cheap at the sizes this package targets (n up to ~64).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

VertexSet = frozenset


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def set_of(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    """Finite undirected simple graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_set(g: Graph, vs: Iterable[int]) -> int:
    m = mask_of(vs)
    if m & ~g.full_mask:
        raise IndexError(f"vertex set {sorted(iter_bits(m))} not inside 0..{g.n - 1}")
    return m


def degree(g: Graph, v: int) -> int:
    g._check_vertex(v)
    return g.adj[v].bit_count()


def min_degree(g: Graph) -> int:
    return min(row.bit_count() for row in g.adj)


def max_degree(g: Graph) -> int:
    return max(row.bit_count() for row in g.adj)


def min_degree_over(g: Graph, vs: Iterable[int]) -> int | None:
    """Smallest degree in ``g`` among ``vs``; ``None`` for an empty set."""
    degs = [g.adj[v].bit_count() for v in vs]
    return min(degs) if degs else None


def universal_vertices(g: Graph) -> list[int]:
    return [v for v in g.vertices if g.adj[v].bit_count() == g.n - 1]


def neighborhood_of_set(g: Graph, h: Iterable[int]) -> frozenset[int]:
    hm = _check_set(g, h)
    out = 0
    for v in iter_bits(hm):
        out |= g.adj[v]
    return set_of(out & ~hm)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``keep``, relabeled in increasing label order.

    Returns the graph together with ``labels`` where ``labels[i]`` is the
    parent-graph label of new vertex ``i``.
    """
    km = _check_set(g, keep)
    labels = tuple(iter_bits(km))
    if not labels:
        raise ValueError("cannot induce a subgraph on an empty vertex set")
    index = {old: new for new, old in enumerate(labels)}
    rows = []
    for old in labels:
        row = 0
        for u in iter_bits(g.adj[old] & km):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(labels), tuple(rows)), labels


def delete_vertices(g: Graph, w: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    wm = _check_set(g, w)
    if wm == g.full_mask:
        raise ValueError("cannot delete every vertex of the graph")
    return induced_subgraph(g, iter_bits(g.full_mask & ~wm))


def add_clique(g: Graph, s: Iterable[int]) -> Graph:
    sm = _check_set(g, s)
    rows = list(g.adj)
    for v in iter_bits(sm):
        rows[v] |= sm & ~(1 << v)
    return Graph(g.n, tuple(rows))


def is_complete(g: Graph) -> bool:
    return all(row.bit_count() == g.n - 1 for row in g.adj)


def is_clique(g: Graph, vs: Iterable[int]) -> bool:
    m = _check_set(g, vs)
    return all((g.adj[v] | 1 << v) & m == m for v in iter_bits(m))


def component_masks(adj: tuple[int, ...] | list[int], alive: int) -> list[int]:
    """Connected components of the subgraph induced on ``alive``, as bitmasks."""
    comps = []
    rest = alive
    while rest:
        seen = rest & -rest
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            nxt &= alive & ~seen
            seen |= nxt
            frontier = nxt
        comps.append(seen)
        rest &= ~seen
    return comps


def is_connected_within(adj: tuple[int, ...] | list[int], alive: int) -> bool:
    if not alive:
        return False
    seen = alive & -alive
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen == alive


def is_connected(g: Graph) -> bool:
    return is_connected_within(g.adj, g.full_mask)


def components(g: Graph) -> list[frozenset[int]]:
    return [set_of(c) for c in component_masks(g.adj, g.full_mask)]


def non_edges(g: Graph) -> Iterator[tuple[int, int]]:
    for u, v in combinations(range(g.n), 2):
        if not g.adj[u] >> v & 1:
            yield u, v
