"""Spider shapes, concrete embeddings, and the exhaustive finder.

A spider is a tree with at most one vertex of degree >= 3. It is described
by the orders of its legs, each leg being a path hanging off the root.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .connectivity import is_k_connected
from .graph import Graph, delete_vertices, iter_bits, mask_of


@dataclass(frozen=True)
class SpiderShape:
    legs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.legs:
            raise ValueError("a spider needs at least one leg")
        if any(t < 1 for t in self.legs):
            raise ValueError(f"leg orders must be positive, got {self.legs}")

    @property
    def order(self) -> int:
        return 1 + sum(self.legs)

    @property
    def unit_legs(self) -> int:
        return sum(1 for t in self.legs if t == 1)

    def is_star(self) -> bool:
        """True for K_{1,r} with r >= 3; smaller stars are paths."""
        return len(self.legs) >= 3 and all(t == 1 for t in self.legs)

    def signature(self) -> tuple[int, ...]:
        return tuple(sorted(self.legs))


def realize_shape(t: int, m: int, strict: bool = False) -> SpiderShape:
    """``t`` legs of order one plus one leg of order ``m - t - 1``.

    With ``strict`` set, stars on four or more vertices are rejected.
    """
    if m < 2:
        raise ValueError(f"spider order must be at least 2, got m={m}")
    if not 0 <= t <= m - 2:
        raise ValueError(f"need 0 <= t <= m - 2, got t={t}, m={m}")
    shape = SpiderShape((1,) * t + (m - t - 1,))
    if strict and shape.is_star():
        raise ValueError(f"t={t}, m={m} describes a star, excluded in strict mode")
    return shape


@dataclass(frozen=True)
class SpiderEmbedding:
    root: int
    legs: tuple[tuple[int, ...], ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset((self.root,) + tuple(v for leg in self.legs for v in leg))

    @property
    def order(self) -> int:
        return 1 + sum(len(leg) for leg in self.legs)

    @property
    def shape(self) -> SpiderShape:
        return SpiderShape(tuple(len(leg) for leg in self.legs))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for leg in self.legs:
            prev = self.root
            for v in leg:
                out.append((prev, v))
                prev = v
        return out

    def to_dict(self) -> dict:
        return {"root": self.root, "legs": [list(leg) for leg in self.legs]}


def embedding_problems(g: Graph, emb: SpiderEmbedding, shape: SpiderShape | None = None) -> list[str]:
    """Everything wrong with ``emb`` as a subgraph of ``g``; empty when valid."""
    problems = []
    flat = [emb.root] + [v for leg in emb.legs for v in leg]
    if any(not 0 <= v < g.n for v in flat):
        return ["vertex out of range"]
    if len(set(flat)) != len(flat):
        problems.append("vertices repeat")
    if any(not leg for leg in emb.legs):
        problems.append("empty leg")
    for a, b in emb.edges():
        if not g.has_edge(a, b):
            problems.append(f"missing edge {a}-{b}")
    if shape is not None and emb.shape.signature() != shape.signature():
        problems.append(f"shape {emb.shape.legs} does not match {shape.legs}")
    return problems


def keeps_k_connected(g: Graph, emb: SpiderEmbedding, k: int) -> bool:
    if emb.order >= g.n:
        return False
    return is_k_connected(delete_vertices(g, emb.vertices)[0], k)


def enumerate_embeddings(g: Graph, shape: SpiderShape, root: int | None = None) -> Iterator[SpiderEmbedding]:
    """Every embedding of ``shape``, once per permutation class of equal-order legs.

    Roots ascend; legs are filled in shape order, with the first vertices of
    equal-order legs forced to increase.
    """
    if shape.order > g.n:
        return
    legs = shape.legs
    # index of the previous leg with the same order, if any
    twin = []
    for i, t in enumerate(legs):
        twin.append(max((j for j in range(i) if legs[j] == t), default=-1))

    roots = range(g.n) if root is None else [root]
    for r in roots:
        placed: list[tuple[int, ...]] = []

        def grow(i: int, used: int) -> Iterator[SpiderEmbedding]:
            if i == len(legs):
                yield SpiderEmbedding(r, tuple(placed))
                return
            floor = placed[twin[i]][0] if twin[i] >= 0 else -1
            for first in iter_bits(g.adj[r] & ~used):
                if first <= floor:
                    continue
                for path in _paths_from(g, first, legs[i], used | 1 << first):
                    placed.append(path)
                    yield from grow(i + 1, used | mask_of(path))
                    placed.pop()

        yield from grow(0, 1 << r)


def _paths_from(g: Graph, start: int, order: int, used: int) -> Iterator[tuple[int, ...]]:
    path = [start]

    def walk(used: int) -> Iterator[tuple[int, ...]]:
        if len(path) == order:
            yield tuple(path)
            return
        for x in iter_bits(g.adj[path[-1]] & ~used):
            path.append(x)
            yield from walk(used | 1 << x)
            path.pop()

    yield from walk(used)


def find_keeping_spider_bruteforce(
    g: Graph, k: int, t: int, m: int, root: int | None = None, strict: bool = False
) -> SpiderEmbedding | None:
    """First embedding of the (t, m) spider whose removal leaves g k-connected."""
    if m >= g.n:
        raise ValueError(f"spider order m={m} must be below the graph order n={g.n}")
    shape = realize_shape(t, m, strict=strict)
    for emb in enumerate_embeddings(g, shape, root):
        if keeps_k_connected(g, emb, k):
            return emb
    return None
