import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spiderkeep.construct import (
    HypothesisError,
    find_keeping_spider_constructive,
    theorem_hypotheses,
    verify_theorem_instance,
)
from spiderkeep.generate import GeneratorConfig, generate_corpus
from spiderkeep.graph import Graph, delete_vertices
from spiderkeep.io import parse_graph6
from spiderkeep.mader import degree_threshold
from spiderkeep.oracle import brute_kappa
from spiderkeep.spider import embedding_problems, realize_shape

# small graphs that drive each branch of the construction
SPLICE = ("G\\Xn|c", 1, 0, 3)
ROOT_LEG = ("FVT^w", 1, 0, 2)
SMALL_END = ("C|", 1, 0, 2)
WHOLE_END = ("DNc", 1, 0, 2)
REDUCED_GREEDY = ("FJaNw", 1, 0, 2)
REDUCED_ROOT_LEG = ("Mxj``crKxf{_z@m}_", 2, 0, 2)


def assert_sound(g, k, t, m, emb):
    assert embedding_problems(g, emb, realize_shape(t, m)) == []
    assert brute_kappa(delete_vertices(g, emb.vertices)[0]) >= k


def test_threshold_example():
    assert degree_threshold(2, 3) == 5
    assert all(theorem_hypotheses(Graph.complete(6), 2, 1, 3).values())
    assert not theorem_hypotheses(Graph.complete(5), 2, 1, 3)["min_degree"]


def test_rejects_graph_below_degree_floor():
    with pytest.raises(HypothesisError) as info:
        find_keeping_spider_constructive(Graph.complete(5), 2, 1, 3)
    assert info.value.clauses["min_degree"] is False


def test_rejects_missing_universal_vertex():
    with pytest.raises(HypothesisError):
        find_keeping_spider_constructive(Graph.cycle(6), 1, 0, 2)


def test_complete_graph():
    res = find_keeping_spider_constructive(Graph.complete(8), 2, 1, 4)
    assert res.succeeded and res.route == "complete"
    assert res.embedding.shape.signature() == (1, 2)
    assert_sound(Graph.complete(8), 2, 1, 4, res.embedding)


def test_k7_all_shapes():
    g = Graph.complete(7)
    for t in range(3):
        res = find_keeping_spider_constructive(g, 2, t, 4)
        assert res.succeeded
        assert_sound(g, 2, t, 4, res.embedding)


def test_smallest_complete_graph_is_a_counterexample_for_k1():
    # K_{m+1} meets every hypothesis for k = 1, yet removing m vertices leaves K_1
    g = Graph.complete(3)
    verdict = verify_theorem_instance(g, 1, 0, 2)
    assert verdict.hypotheses_met
    assert verdict.status == "counterexample"
    assert verdict.constructive.claim_failures
    assert verdict.method_agreement is True


@pytest.mark.parametrize("case, move, route", [
    (SPLICE, "splice", "direct"),
    (ROOT_LEG, "root-leg", "direct"),
    (SMALL_END, "small-end", "direct"),
    (WHOLE_END, "whole-end", "end-reduction"),
    (REDUCED_GREEDY, "greedy", "end-reduction"),
    (REDUCED_ROOT_LEG, "root-leg", "end-reduction"),
])
def test_each_move_is_exercised(case, move, route):
    g6, k, t, m = case
    g = parse_graph6(g6)
    res = find_keeping_spider_constructive(g, k, t, m)
    assert res.succeeded and res.route == route
    assert move in [s.move for s in res.trace]
    assert_sound(g, k, t, m, res.embedding)


def test_splice_replaces_the_tail():
    g6, k, t, m = SPLICE
    res = find_keeping_spider_constructive(parse_graph6(g6), k, t, m)
    (step,) = [s for s in res.trace if s.move == "splice"]
    assert step.q in step.end
    assert len(step.replacement) == len(step.detached) + 1
    assert step.replacement[0] == step.q
    assert step.kappa_h == k


def test_direct_route_roots_at_universal_vertex():
    g6, k, t, m = ROOT_LEG
    g = parse_graph6(g6)
    res = find_keeping_spider_constructive(g, k, t, m)
    assert g.adj[res.embedding.root].bit_count() == g.n - 1


def sweep_graph(seed: int, k: int, m: int, n: int) -> Graph:
    cfg = GeneratorConfig(n=n, k=k, delta_min=degree_threshold(k, m), apex=True, seed=seed, family="mixed")
    return next(generate_corpus(cfg))


@settings(max_examples=60)
@given(st.integers(0, 10**6), st.sampled_from([1, 2]), st.sampled_from([2, 3, 4]), st.data())
def test_construction_is_sound(seed, k, m, data):
    n = data.draw(st.integers(degree_threshold(k, m) + 2, 12))
    t = data.draw(st.integers(0, m - 2))
    g = sweep_graph(seed, k, m, n)
    res = find_keeping_spider_constructive(g, k, t, m)
    assert res.claim_failures == []
    assert res.succeeded, res.gaps
    assert_sound(g, k, t, m, res.embedding)

    grown = [s for s in res.trace if s.move not in ("complete", "whole-end")]
    if grown:
        assert [s.order for s in grown] == list(range(2, m + 1))
    assert res.trace[-1].order == m
    for step in res.trace:
        if step.move in ("splice", "root-leg", "small-end"):
            assert step.kappa_h == k
        if step.move == "greedy":
            assert step.kappa_h > k


@settings(max_examples=30)
@given(st.integers(0, 10**6), st.sampled_from([1, 2]), st.sampled_from([2, 3]))
def test_methods_agree(seed, k, m):
    g = sweep_graph(seed, k, m, degree_threshold(k, m) + 3)
    for t in range(m - 1):
        verdict = verify_theorem_instance(g, k, t, m)
        assert verdict.status == "ok"
        assert verdict.method_agreement is True


def test_verdict_skips_unmet_hypotheses():
    verdict = verify_theorem_instance(Graph.cycle(6), 1, 0, 2)
    assert verdict.status == "skipped"
    assert verdict.to_dict()["witness"] is None
    with pytest.raises(ValueError):
        verify_theorem_instance(Graph.cycle(6), 1, 0, 2, method="magic")
