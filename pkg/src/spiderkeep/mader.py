"""Anchored pairs (G, C) and checkers for the structural lemmas.

An anchored pair couples a k-connected graph with a k-clique ``C`` whose
complement has large degree. The checkers here test the lemmas that the
spider construction leans on and return witnesses when one fails.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .connectivity import (
    ends,
    fragments_to,
    is_k_connected,
    is_separator,
    kappa,
    minimum_separators,
)
from .graph import (
    Graph,
    add_clique,
    delete_vertices,
    is_clique,
    is_connected,
    is_connected_within,
    iter_bits,
    mask_of,
    min_degree,
)


class SearchExhausted(RuntimeError):
    """A search that a theorem guarantees to succeed came back empty."""


def degree_threshold(k: int, m: int) -> int:
    return 3 * k // 2 + m - 1


@dataclass(frozen=True)
class Membership:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class AnchoredPair:
    graph: Graph
    anchor: frozenset[int]
    k: int
    m: int

    def in_class(self) -> Membership:
        return in_F_k_m(self.graph, self.anchor, self.k, self.m)

    def in_plus_class(self) -> Membership:
        return in_F_k_m_plus(self.graph, self.anchor, self.k, self.m)


def in_F_k_m(g: Graph, c, k: int, m: int) -> Membership:
    c = frozenset(c)
    if any(not 0 <= v < g.n for v in c):
        return Membership(False, "anchor vertex out of range")
    if not is_clique(g, c):
        return Membership(False, "anchor not complete")
    if len(c) != k:
        return Membership(False, f"anchor has {len(c)} vertices, expected {k}")
    if not is_k_connected(g, k):
        return Membership(False, f"graph not {k}-connected")
    need = degree_threshold(k, m)
    low = min((g.adj[v].bit_count() for v in g.vertices if v not in c), default=None)
    if low is not None and low < need:
        return Membership(False, f"degree outside anchor {low} < {need}")
    return Membership(True)


def in_F_k_m_plus(g: Graph, c, k: int, m: int) -> Membership:
    base = in_F_k_m(g, c, k, m)
    if not base:
        return base
    if not is_k_connected(g, k + 1):
        return Membership(False, f"graph not {k + 1}-connected")
    return Membership(True)


@dataclass(frozen=True)
class LemmaCheck:
    """Outcome of one lemma instance; ``witness`` is set only on failure."""

    holds: bool
    antecedent: bool = True
    witness: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds


def _minus(g: Graph, w) -> Graph:
    return delete_vertices(g, w)[0]


def check_lemma1(g: Graph, s, end) -> LemmaCheck:
    """For an end F with |F| >= 2, G[S] - V(F-bar) is (kappa+1)-connected."""
    s, end = frozenset(s), frozenset(end)
    k = kappa(g)
    if len(end) < 2:
        return LemmaCheck(True, antecedent=False)
    rest = frozenset(g.vertices) - s - end
    ok = is_k_connected(_minus(add_clique(g, s), rest), k + 1)
    return LemmaCheck(ok, witness={} if ok else {"separator": s, "end": end, "k": k})


def check_lemma2a(g: Graph, s, f) -> LemmaCheck:
    """G[S] - V(F) stays kappa-connected for every fragment F."""
    s, f = frozenset(s), frozenset(f)
    k = kappa(g)
    ok = is_k_connected(_minus(add_clique(g, s), f), k)
    return LemmaCheck(ok, witness={} if ok else {"separator": s, "fragment": f, "k": k})


def _check_lemma2_pre(g: Graph, k: int, s, f, w, m: int) -> None:
    if kappa(g) != k:
        raise ValueError(f"graph must have connectivity exactly {k}")
    if len(s) != k or not is_separator(g, s):
        raise ValueError("s must be a minimum separating set")
    if f not in set(fragments_to(g, s)):
        raise ValueError("f is not a fragment to s")
    if w & (s | f):
        raise ValueError("w must avoid S and F")
    if len(w) > m:
        raise ValueError(f"|w| = {len(w)} exceeds m = {m}")


def _lemma2_implication(g: Graph, k: int, s, f, w) -> LemmaCheck:
    antecedent = is_k_connected(_minus(add_clique(g, s), f | w), k)
    if not antecedent:
        return LemmaCheck(True, antecedent=False)
    ok = is_k_connected(_minus(g, w), k) if w else is_k_connected(g, k)
    return LemmaCheck(ok, witness={} if ok else {"separator": s, "fragment": f, "w": w})


def check_lemma2b(g: Graph, k: int, m: int, s, f, w) -> LemmaCheck:
    s, f, w = frozenset(s), frozenset(f), frozenset(w)
    if min_degree(g) < degree_threshold(k, m):
        raise ValueError("minimum degree below the lemma threshold")
    _check_lemma2_pre(g, k, s, f, w, m)
    return _lemma2_implication(g, k, s, f, w)


def check_lemma2c(pair: AnchoredPair, s, f, w) -> LemmaCheck:
    g, k, m = pair.graph, pair.k, pair.m
    s, f, w = frozenset(s), frozenset(f), frozenset(w)
    member = pair.in_class()
    if not member:
        raise ValueError(f"pair not in F_k(m): {member.reason}")
    if not pair.anchor <= f | s:
        raise ValueError("anchor must lie inside F and S")
    _check_lemma2_pre(g, k, s, f, w, m)
    return _lemma2_implication(g, k, s, f, w)


def check_fact1(g: Graph, k: int, m: int, s, end) -> LemmaCheck:
    """(G[S] - V(E-bar), S) belongs to the plus class for an end E of G."""
    s, end = frozenset(s), frozenset(end)
    rest = frozenset(g.vertices) - s - end
    h, labels = delete_vertices(add_clique(g, s), rest)
    local = frozenset(labels.index(v) for v in s)
    member = in_F_k_m_plus(h, local, k, m)
    return LemmaCheck(member.ok, witness={} if member else {"separator": s, "end": end, "reason": member.reason})


def find_removable_path(pair: AnchoredPair, p0: int) -> list[int]:
    """A path on m vertices from ``p0`` avoiding C whose removal keeps G k-connected.

    Depth-first over simple paths; extensions are tried by descending number
    of neighbours outside the path and the anchor, then by label.
    Connectivity is tested only on complete m-vertex paths.
    """
    g, c, k, m = pair.graph, pair.anchor, pair.k, pair.m
    if not 0 <= p0 < g.n:
        raise ValueError(f"start vertex {p0} out of range")
    if p0 in c:
        raise ValueError("start vertex lies in the anchor")
    member = pair.in_plus_class()
    if not member:
        raise ValueError(f"pair not in the plus class: {member.reason}")

    cmask = mask_of(c)
    path = [p0]
    used = cmask | 1 << p0

    def search() -> bool:
        nonlocal used
        if len(path) == m:
            return is_k_connected(_minus(g, path), k)
        tip = path[-1]
        cands = list(iter_bits(g.adj[tip] & ~used))
        cands.sort(key=lambda x: (-(g.adj[x] & ~used & ~(1 << x)).bit_count(), x))
        for x in cands:
            path.append(x)
            used |= 1 << x
            if search():
                return True
            path.pop()
            used &= ~(1 << x)
        return False

    if not search():
        raise SearchExhausted(f"no removable path of order {m} from {p0}")
    return path


def check_diwan_tholiya(g: Graph, tree: Graph) -> dict[int, int]:
    """Embed ``tree`` as a subtree whose removal leaves ``g`` connected.

    Returns a map from tree vertices to host vertices.
    """
    d = tree.n
    if tree.num_edges() != d - 1 or not is_connected(tree):
        raise ValueError("pattern is not a tree")
    if not is_connected(g):
        raise ValueError("host graph must be connected")
    if min_degree(g) < d:
        raise ValueError(f"host minimum degree below tree order {d}")

    order = [0]
    parent = {0: -1}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for b in tree.neighbors(a):
            if b not in parent:
                parent[b] = a
                order.append(b)
                queue.append(b)

    image: dict[int, int] = {}
    full = g.full_mask

    def place(i: int, used: int) -> bool:
        if i == d:
            rest = full & ~used
            return rest != 0 and is_connected_within(g.adj, rest)
        a = order[i]
        pool = full if parent[a] < 0 else g.adj[image[parent[a]]]
        for x in iter_bits(pool & ~used):
            image[a] = x
            if place(i + 1, used | 1 << x):
                return True
        image.pop(a, None)
        return False

    if not place(0, 0):
        raise SearchExhausted("no connectivity-keeping tree embedding found")
    return dict(image)


def lemma_sweep(g: Graph) -> list[LemmaCheck]:
    """Clique-augmented connectivity over all ends and all separator/fragment pairs; failures only."""
    bad = []
    for s, e in ends(g):
        res = check_lemma1(g, s, e)
        if not res:
            bad.append(res)
    for s in minimum_separators(g):
        for f in fragments_to(g, s):
            res = check_lemma2a(g, s, f)
            if not res:
                bad.append(res)
    return bad
