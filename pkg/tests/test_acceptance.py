"""Acceptance criteria, each at its stated scale; one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the verdict lines are
printed even without ``-s``.
"""

import random
import time

import pytest

from spiderkeep import harness
from spiderkeep.connectivity import ends, fragments_to, kappa, minimum_separators
from spiderkeep.construct import find_keeping_spider_constructive
from spiderkeep.generate import GeneratorConfig, generate_anchored_pairs, generate_corpus
from spiderkeep.graph import Graph, delete_vertices, is_complete
from spiderkeep.io import read_graphs
from spiderkeep.mader import check_lemma1, check_lemma2a, degree_threshold, find_removable_path
from spiderkeep.oracle import brute_kappa
from spiderkeep.spider import embedding_problems, realize_shape

from .conftest import DATA

pytestmark = pytest.mark.acceptance

SEED = 2024


@pytest.fixture
def verdict(capsys):
    def emit(label: str, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        assert ok, detail
    return emit


@pytest.fixture(scope="module")
def sweep():
    t0 = time.perf_counter()
    reports = harness.theorem_sweep(SEED, per_cell=200, n_max=14)
    return reports, time.perf_counter() - t0


@pytest.fixture(scope="module")
def exact_kappa_corpus():
    rng = random.Random(SEED)
    graphs = []
    for k in (1, 2, 3):
        for _ in range(100):
            n = rng.randint(k + 4, 12)
            cfg = GeneratorConfig(n=n, k=k, delta_min=k, seed=rng.randrange(2**32),
                                  family=rng.choice(("gnp", "glued")), exact_kappa=True, allow_complete=False)
            graphs.extend(generate_corpus(cfg))
    return graphs


def test_criterion1_kappa_matches_oracle(verdict):
    rng = random.Random(SEED)
    t0 = time.perf_counter()
    mismatches = 0
    for _ in range(500):
        n = rng.randint(1, 8)
        p = rng.random()
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        mismatches += kappa(g) != brute_kappa(g)
    elapsed = time.perf_counter() - t0
    verdict("1 connectivity oracle equivalence", mismatches == 0 and elapsed < 60,
            f"500 graphs, {mismatches} mismatches, {elapsed:.1f}s (limit 60s)")


def test_criterion2_clique_augmented_end(verdict, exact_kappa_corpus):
    t0 = time.perf_counter()
    checked = violations = 0
    for g in exact_kappa_corpus:
        for s, e in ends(g):
            res = check_lemma1(g, s, e)
            checked += res.antecedent
            violations += not res
    elapsed = time.perf_counter() - t0
    ok = violations == 0 and elapsed < 300 and len(exact_kappa_corpus) == 300
    verdict("2 end augmentation gains connectivity", ok,
            f"{len(exact_kappa_corpus)} graphs, {checked} ends with |F|>=2, {violations} violations, {elapsed:.1f}s")


def test_criterion3_fragment_removal(verdict, exact_kappa_corpus):
    checked = violations = 0
    for g in exact_kappa_corpus:
        assert not is_complete(g)
        for s in minimum_separators(g):
            for f in fragments_to(g, s):
                checked += 1
                violations += not check_lemma2a(g, s, f)
    verdict("3 fragment removal keeps connectivity", violations == 0,
            f"{checked} separator/fragment pairs, {violations} violations")


def test_criterion4_theorem_sweep(verdict, sweep):
    reports, elapsed = sweep
    cells = [(r.parameters["k"], r.parameters["m"], r.parameters["t"]) for r in reports]
    short = [c for c, r in zip(cells, reports) if r.hypotheses_met < 200]
    failed = sum(len(r.failures) for r in reports)
    codes = {r.exit_code for r in reports}
    ok = len(cells) == 12 and not short and failed == 0 and codes == {0} and elapsed < 1800
    total = sum(r.hypotheses_met for r in reports)
    verdict("4 spider theorem sweep", ok,
            f"{len(cells)} cells, {total} instances, {failed} counterexamples, "
            f"cells under 200: {short}, {elapsed:.1f}s (limit 1800s)")


def test_criterion5_constructive_agreement(verdict, sweep):
    reports, _ = sweep
    claims = sum(len(r.claim_failures) for r in reports)
    fallbacks = sum(r.fallbacks for r in reports)
    disagreements = sum(len(r.method_disagreements) for r in reports)
    # independent re-verification of every constructive witness
    bad = 0
    for k in (1, 2):
        for m in (2, 3, 4):
            for g in harness.sweep_corpus(SEED, k, m, 200):
                for t in range(m - 1):
                    res = find_keeping_spider_constructive(g, k, t, m)
                    emb = res.embedding
                    bad += (not res.succeeded or embedding_problems(g, emb, realize_shape(t, m))
                            or brute_kappa(delete_vertices(g, emb.vertices)[0]) < k)
    ok = claims == fallbacks == disagreements == bad == 0
    verdict("5 constructive finder agrees with exhaustive search", ok,
            f"claim failures {claims}, fallbacks {fallbacks}, disagreements {disagreements}, "
            f"witnesses failing re-verification {bad}")


def test_criterion6_removable_paths(verdict):
    rng = random.Random(SEED)
    found = bad = 0
    for k in (1, 2):
        for m in (1, 2, 3, 4):
            for pair in generate_anchored_pairs(25, rng.randrange(2**32), k, m, (k + 2, 12)):
                g = pair.graph
                p0 = rng.choice(sorted(set(g.vertices) - pair.anchor))
                path = find_removable_path(pair, p0)
                valid = (len(path) == m == len(set(path)) and path[0] == p0
                         and not set(path) & pair.anchor
                         and all(g.has_edge(a, b) for a, b in zip(path, path[1:]))
                         and brute_kappa(delete_vertices(g, path)[0]) >= k)
                found += 1
                bad += not valid
    verdict("6 removable path search", found == 200 and bad == 0, f"{found} pairs, {bad} unverified paths")


def path_samples(k: int, m: int, count: int) -> list[Graph]:
    rng = random.Random(f"{SEED}:path:{m}")
    need = degree_threshold(k, m)
    out = []
    for _ in range(count):
        cfg = GeneratorConfig(n=rng.randint(need + 1, 12), k=k, delta_min=need,
                              seed=rng.randrange(2**32), family="mixed")
        out.extend(generate_corpus(cfg))
    return out


def test_criterion7_prior_results(verdict):
    small = read_graphs(DATA / "connected_le8.g6")
    corpus = small + read_graphs(DATA / "random9.g6")
    lines, ok = [], True
    for k in (1, 2):
        for name, rep in (("ckl", harness.check_ckl(corpus, k)), ("fk-edge", harness.check_fk_edge(corpus, k))):
            ok &= rep.exit_code == 0 and rep.successes == rep.hypotheses_met > 0
            lines.append(f"{name} k={k} {rep.successes}/{rep.hypotheses_met}")
    rep = harness.check_diwan_tholiya_corpus(small, 3)
    ok &= rep.exit_code == 0 and rep.successes == rep.hypotheses_met > 0
    lines.append(f"diwan-tholiya {rep.successes}/{rep.hypotheses_met}")
    for m in (1, 2, 3, 4):
        rep = harness.check_path_case(path_samples(2, m, 50), 2, m)
        ok &= rep.exit_code == 0 and rep.successes == rep.hypotheses_met == 50
        lines.append(f"path k=2 m={m} {rep.successes}/{rep.hypotheses_met}")
    verdict("7 prior results", ok, "; ".join(lines))


def test_criterion8_determinism(verdict, sweep):
    reports, _ = sweep
    again = harness.theorem_sweep(SEED, per_cell=200, n_max=14)
    first, second = harness.sweep_json(reports), harness.sweep_json(again)
    verdict("8 deterministic sweep report", first == second,
            f"{len(first)} bytes, identical={first == second}")
