"""Constructive search for connectivity-keeping spiders.

The finder grows a spider one vertex at a time while keeping G - T
k-connected, following the extension argument:

* if H = G - T is (k+1)-connected, any neighbour of the growing tip in
  H - C can be added;
* otherwise kappa(H) = k and an end E of H avoiding the anchor C is used.
  The long leg is lengthened by cutting the tail beyond the farthest
  spider vertex y with a neighbour q in E and re-growing it as a removable
  path inside E starting at q. A unit leg is added by hanging a vertex of
  E off the root.

When G itself has connectivity exactly k the search runs inside
G[S] - V(E-bar) for an end E of G, anchored at S, and the result is lifted
back to G.

Every accepted step is re-checked with ``is_k_connected``. A failed check
is a ``ClaimViolation``; a situation the argument does not cover (the root
has no neighbour in any usable end) is a ``RouteGap``. Either one makes
the finder fall back to exhaustive search, and the result records why.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .connectivity import ends, is_k_connected, kappa
from .graph import (
    Graph,
    add_clique,
    delete_vertices,
    induced_subgraph,
    is_complete,
    max_degree,
    min_degree,
    universal_vertices,
)
from .mader import AnchoredPair, SearchExhausted, degree_threshold, find_removable_path, in_F_k_m_plus
from .spider import (
    SpiderEmbedding,
    embedding_problems,
    find_keeping_spider_bruteforce,
    keeps_k_connected,
    realize_shape,
)

log = logging.getLogger(__name__)


class HypothesisError(ValueError):
    def __init__(self, clauses: dict[str, bool]):
        self.clauses = clauses
        failed = ", ".join(name for name, ok in clauses.items() if not ok)
        super().__init__(f"hypotheses violated: {failed}")


class ClaimViolation(Exception):
    def __init__(self, claim: str, **state):
        self.claim = claim
        self.state = state
        super().__init__(claim)


class RouteGap(Exception):
    pass


def theorem_hypotheses(g: Graph, k: int, t: int, m: int, strict: bool = False) -> dict[str, bool]:
    shape_ok = m >= 2 and 0 <= t <= m - 2
    if shape_ok and strict:
        shape_ok = not realize_shape(t, m).is_star()
    return {
        "k_connected": k >= 1 and is_k_connected(g, k),
        "min_degree": min_degree(g) >= degree_threshold(k, m),
        "universal_vertex": max_degree(g) == g.n - 1,
        "shape": shape_ok,
    }


@dataclass
class Step:
    """One accepted growth step; vertex labels refer to the input graph."""

    move: str
    leg: str
    order: int
    kappa_h: int | None = None
    end: frozenset[int] | None = None
    separator: frozenset[int] | None = None
    complement: frozenset[int] | None = None
    y: int | None = None
    q: int | None = None
    detached: tuple[int, ...] = ()
    replacement: tuple[int, ...] = ()
    spider: SpiderEmbedding | None = None


@dataclass
class ConstructiveResult:
    embedding: SpiderEmbedding | None
    route: str
    trace: list[Step] = field(default_factory=list)
    claim_failures: list[dict] = field(default_factory=list)
    gaps: list[str] = field(default_factory=list)
    fallback_used: bool = False

    @property
    def succeeded(self) -> bool:
        """True when the construction itself, not the fallback, produced the witness."""
        return self.embedding is not None and not self.fallback_used


class _Grower:
    """Spider growth inside a working graph ``w`` with anchor ``c``.

    ``labels`` maps working-graph vertices to input-graph vertices.
    """

    def __init__(self, w: Graph, labels: tuple[int, ...], c: frozenset[int], root: int,
                 k: int, t: int, m: int, trace: list[Step]):
        self.w, self.labels, self.c = w, labels, c
        self.root, self.k, self.t, self.m = root, k, t, m
        self.units: list[int] = []
        self.long: list[int] = []
        self.trace = trace

    # -- bookkeeping -------------------------------------------------------
    def spider_vertices(self) -> frozenset[int]:
        return frozenset([self.root, *self.units, *self.long])

    def order(self) -> int:
        return 1 + len(self.units) + len(self.long)

    def embedding(self, lift: bool = True) -> SpiderEmbedding:
        f = (lambda v: self.labels[v]) if lift else (lambda v: v)
        legs = tuple((f(u),) for u in self.units)
        if self.long:
            legs += (tuple(f(v) for v in self.long),)
        return SpiderEmbedding(f(self.root), legs)

    def lift(self, vs) -> frozenset[int]:
        return frozenset(self.labels[v] for v in vs)

    def record(self, move: str, leg: str, **info) -> None:
        for key in ("end", "separator", "complement"):
            if info.get(key) is not None:
                info[key] = self.lift(info[key])
        for key in ("y", "q"):
            if info.get(key) is not None:
                info[key] = self.labels[info[key]]
        for key in ("detached", "replacement"):
            if key in info:
                info[key] = tuple(self.labels[v] for v in info[key])
        self.trace.append(Step(move, leg, self.order(), spider=self.embedding(), **info))

    def verify(self, claim: str) -> None:
        emb = self.embedding(lift=False)
        if embedding_problems(self.w, emb):
            raise ClaimViolation(claim + " (malformed spider)", spider=self.embedding())
        if not keeps_k_connected(self.w, emb, self.k):
            raise ClaimViolation(claim, spider=self.embedding())

    def distance(self, v: int) -> int:
        if v == self.root:
            return 0
        if v in self.units:
            return 1
        return self.long.index(v) + 1

    # -- main loop ---------------------------------------------------------
    def grow(self) -> SpiderEmbedding:
        k = self.k
        while self.order() < self.m:
            need_unit = self.t - len(self.units)
            need_long = (self.m - self.t - 1) - len(self.long)
            want = "long" if need_long >= need_unit else "unit"

            tvs = self.spider_vertices()
            h, hl = delete_vertices(self.w, tvs)
            kh = kappa(h)
            if kh < k:
                raise ClaimViolation("G - T stays k-connected", kappa_h=kh, spider=self.embedding())
            if kh > k:
                self._greedy(want, hl, kh)
                continue
            self._end_step(want, need_long, h, hl)
        return self.embedding()

    def _greedy(self, want: str, hl: tuple[int, ...], kh: int) -> None:
        tip = self.long[-1] if want == "long" and self.long else self.root
        h_vertices = frozenset(hl) - self.c
        cands = sorted(v for v in self.w.neighbors(tip) if v in h_vertices)
        if not cands:
            raise ClaimViolation("tip has a neighbour in H - C", tip=self.labels[tip])
        s = cands[0]
        (self.long if want == "long" else self.units).append(s)
        self.verify("greedy step keeps G - T k-connected")
        self.record("greedy", want, kappa_h=kh)

    def _end_step(self, want: str, need_long: int, h: Graph, hl: tuple[int, ...]) -> None:
        k = self.k
        if is_complete(h):
            raise RouteGap(f"H is complete with connectivity {k}; no end to work in")
        cands = []
        for s_h, e_h in ends(h):
            e = frozenset(hl[v] for v in e_h)
            s = frozenset(hl[v] for v in s_h)
            if not e & self.c:
                cands.append((s, e, s_h, e_h))
        if not cands:
            raise ClaimViolation("an end of H avoids the anchor")

        if want == "long" and self.long:
            move, chosen = "splice", cands[0]
        else:
            # a unit leg, or the first vertex of the long leg, hangs off the root
            root_nbrs = frozenset(self.w.neighbors(self.root))
            hit = [cand for cand in cands if cand[1] & root_nbrs]
            if hit:
                move, chosen = "root-leg", hit[0]
            elif need_long > 0 and self.long:
                move, chosen, want = "splice", cands[0], "long"
            else:
                raise RouteGap("root has no neighbour in any end of H avoiding the anchor")
        s, e, s_h, e_h = chosen

        if len(e) == 1:
            self._small_end(want, s, e)
            return

        # working graph for the removable-path search: H[S] restricted to E and S
        hs = add_clique(h, s_h)
        ge, gl = induced_subgraph(hs, s_h | e_h)
        ge_labels = tuple(hl[v] for v in gl)
        if not is_k_connected(ge, k + 1):
            raise ClaimViolation("H[S] - V(E-bar) is (k+1)-connected", end=self.lift(e), separator=self.lift(s))
        anchor_ge = frozenset(i for i, v in enumerate(ge_labels) if v in s)
        complement = frozenset(hl) - s - e

        if move == "root-leg":
            self._root_leg(want, ge, ge_labels, anchor_ge, s, e, complement)
        else:
            self._splice(ge, ge_labels, anchor_ge, s, e, complement)

    def _small_end(self, want: str, s: frozenset[int], e: frozenset[int]) -> None:
        (z,) = e
        if self.k >= 2:
            raise ClaimViolation("ends of H have at least two vertices", end=self.lift(e))
        tvs = self.spider_vertices()
        if self.order() != self.m - 1 or not tvs <= frozenset(self.w.neighbors(z)):
            raise ClaimViolation("a one-vertex end sees the whole spider", end=self.lift(e))
        (self.long if want == "long" else self.units).append(z)
        self.verify("one-vertex end extension keeps G - T k-connected")
        self.record("small-end", want, kappa_h=self.k, end=e, separator=s, q=z)

    def _root_leg(self, want, ge, ge_labels, anchor_ge, s, e, complement) -> None:
        k = self.k
        local = {v: i for i, v in enumerate(ge_labels)}
        for q in sorted(e & frozenset(self.w.neighbors(self.root))):
            if is_k_connected(delete_vertices(ge, [local[q]])[0], k):
                break
        else:
            raise ClaimViolation("some q in E keeps H[S] - V(E-bar) - q k-connected", end=self.lift(e))
        (self.long if want == "long" else self.units).append(q)
        self.verify("unit leg through the root keeps G - T k-connected")
        self.record("root-leg", want, kappa_h=k, end=e, separator=s, complement=complement, y=self.root, q=q)

    def _splice(self, ge, ge_labels, anchor_ge, s, e, complement) -> None:
        k = self.k
        tvs = sorted(self.spider_vertices())
        touching = [v for v in tvs if frozenset(self.w.neighbors(v)) & e]
        if not touching:
            raise ClaimViolation("the spider has a neighbour in E", end=self.lift(e))
        y = max(touching, key=lambda v: (self.distance(v), -v))
        q = min(e & frozenset(self.w.neighbors(y)))

        if y == self.root:
            detached, prefix, units = list(self.long), [], list(self.units)
        elif y in self.long:
            i = self.long.index(y)
            detached, prefix, units = self.long[i + 1:], self.long[: i + 1], list(self.units)
        else:
            # y is a unit leg: it becomes the start of the long leg, p1 turns into a unit leg
            detached = self.long[1:]
            units = [u for u in self.units if u != y] + self.long[:1]
            prefix = [y]

        pair = AnchoredPair(ge, anchor_ge, k, len(detached) + 1)
        member = in_F_k_m_plus(ge, anchor_ge, k, len(detached) + 1)
        if not member:
            raise ClaimViolation("replacement pair lies in the plus class", reason=member.reason, end=self.lift(e))
        local = {v: i for i, v in enumerate(ge_labels)}
        try:
            q_path = find_removable_path(pair, local[q])
        except SearchExhausted as exc:
            raise ClaimViolation("removable path exists inside E", end=self.lift(e)) from exc
        replacement = [ge_labels[i] for i in q_path]

        self.units = units
        self.long = prefix + replacement
        self.verify("spliced spider keeps G - T k-connected")
        self.record("splice", "long", kappa_h=k, end=e, separator=s, complement=complement,
                    y=y, q=q, detached=tuple(detached), replacement=tuple(replacement))


def _spider_on(root: int, others: list[int], t: int, m: int) -> SpiderEmbedding:
    """Spider on ``root`` and the first m - 1 of ``others``, assuming they span a clique."""
    others = others[: m - 1]
    legs = tuple((v,) for v in others[:t]) + (tuple(others[t:]),)
    return SpiderEmbedding(root, legs)


def find_keeping_spider_constructive(g: Graph, k: int, t: int, m: int, strict: bool = False) -> ConstructiveResult:
    """Grow a spider with t unit legs and one leg of order m - t - 1 keeping g k-connected."""
    clauses = theorem_hypotheses(g, k, t, m, strict)
    if not all(clauses.values()):
        raise HypothesisError(clauses)

    trace: list[Step] = []
    result = ConstructiveResult(None, "direct", trace)
    try:
        if is_complete(g):
            result.route = "complete"
            root = universal_vertices(g)[0]
            emb = _spider_on(root, [v for v in g.vertices if v != root], t, m)
            if not keeps_k_connected(g, emb, k):
                raise ClaimViolation("complete graphs keep k-connectivity", spider=emb)
            trace.append(Step("complete", "all", m, spider=emb))
            result.embedding = emb
        elif is_k_connected(g, k + 1):
            root = universal_vertices(g)[0]
            grower = _Grower(g, tuple(g.vertices), frozenset(), root, k, t, m, trace)
            result.embedding = grower.grow()
        else:
            result.route = "end-reduction"
            result.embedding = _via_end(g, k, t, m, trace, result.gaps)
    except ClaimViolation as exc:
        log.warning("claim failed: %s %s", exc.claim, exc.state)
        result.claim_failures.append({"claim": exc.claim, **{key: _plain(v) for key, v in exc.state.items()}})
    except RouteGap as exc:
        result.gaps.append(str(exc))

    if result.embedding is not None:
        emb = result.embedding
        shape = realize_shape(t, m)
        if embedding_problems(g, emb, shape) or not keeps_k_connected(g, emb, k):
            result.claim_failures.append({"claim": "final witness re-verifies", "spider": emb.to_dict()})
            result.embedding = None

    if result.embedding is None:
        result.fallback_used = True
        result.embedding = find_keeping_spider_bruteforce(g, k, t, m, strict=strict)
    return result


def _via_end(g: Graph, k: int, t: int, m: int, trace: list[Step], gaps: list[str]) -> SpiderEmbedding:
    """kappa(g) == k: grow inside G[S] - V(E-bar) for an end E, then lift."""
    s, e = ends(g)[0]
    if k == 1 and len(e) == m:
        # every vertex of E has m neighbours inside E plus one cut vertex, so E is a
        # clique; G - E = S + E-bar is connected. The reduced graph would shrink to K_1.
        members = sorted(e)
        emb = _spider_on(members[0], members[1:], t, m)
        if embedding_problems(g, emb) or not keeps_k_connected(g, emb, k):
            raise ClaimViolation("an m-vertex end for k = 1 is a removable clique", end=e)
        trace.append(Step("whole-end", "all", m, end=e, separator=s, spider=emb))
        return emb
    rest = frozenset(g.vertices) - s - e
    w, labels = delete_vertices(add_clique(g, s), rest)
    local = {v: i for i, v in enumerate(labels)}
    anchor = frozenset(local[v] for v in s)
    member = in_F_k_m_plus(w, anchor, k, m)
    if not member:
        raise ClaimViolation("G[S] - V(E-bar) with anchor S lies in the plus class", reason=member.reason)

    # roots by descending degree inside the reduced graph; retry only on route gaps
    roots = sorted((local[v] for v in e), key=lambda v: (-w.adj[v].bit_count(), v))
    for root in roots:
        start = len(trace)
        grower = _Grower(w, labels, anchor, root, k, t, m, trace)
        try:
            grower.grow()
        except RouteGap as exc:
            gaps.append(f"root {labels[root]}: {exc}")
            del trace[start:]
            continue
        emb = grower.embedding()
        if not keeps_k_connected(g, emb, k):
            raise ClaimViolation("spider inside the end lifts to G", spider=emb)
        return emb
    raise RouteGap("no root inside the end completes the construction")


def _plain(v):
    if isinstance(v, frozenset):
        return sorted(v)
    if isinstance(v, SpiderEmbedding):
        return v.to_dict()
    return v


METHODS = ("brute", "constructive", "both")


@dataclass
class TheoremVerdict:
    hypotheses: dict[str, bool]
    spider_found: bool = False
    witness: SpiderEmbedding | None = None
    method: str = "both"
    method_agreement: bool | None = None
    constructive: ConstructiveResult | None = None

    @property
    def hypotheses_met(self) -> bool:
        return all(self.hypotheses.values())

    @property
    def counterexample(self) -> bool:
        return self.hypotheses_met and not self.spider_found

    @property
    def claim_failures(self) -> list[dict]:
        return self.constructive.claim_failures if self.constructive else []

    @property
    def status(self) -> str:
        if not self.hypotheses_met:
            return "skipped"
        return "counterexample" if self.counterexample else "ok"

    def to_dict(self) -> dict:
        out = {
            "status": self.status,
            "hypotheses": dict(self.hypotheses),
            "spider_found": self.spider_found,
            "witness": self.witness.to_dict() if self.witness else None,
            "method": self.method,
            "method_agreement": self.method_agreement,
        }
        if self.constructive is not None:
            out["constructive"] = {
                "route": self.constructive.route,
                "succeeded": self.constructive.succeeded,
                "fallback_used": self.constructive.fallback_used,
                "claim_failures": self.constructive.claim_failures,
                "gaps": list(self.constructive.gaps),
            }
        return out


def verify_theorem_instance(g: Graph, k: int, t: int, m: int, method: str = "both", strict: bool = False) -> TheoremVerdict:
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    verdict = TheoremVerdict(theorem_hypotheses(g, k, t, m, strict), method=method)
    if not verdict.hypotheses_met:
        return verdict

    brute = None
    if method in ("brute", "both"):
        brute = find_keeping_spider_bruteforce(g, k, t, m, strict=strict)
    if method in ("constructive", "both"):
        verdict.constructive = find_keeping_spider_constructive(g, k, t, m, strict=strict)

    shape = realize_shape(t, m)
    candidates = [brute, verdict.constructive.embedding if verdict.constructive else None]
    for emb in candidates:
        if emb is not None and not embedding_problems(g, emb, shape) and keeps_k_connected(g, emb, k):
            verdict.witness = emb
            verdict.spider_found = True
            break
    if method == "both":
        verdict.method_agreement = (brute is not None) == verdict.constructive.succeeded
    return verdict
