"""Batch verification over graph corpora and report emission."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .connectivity import is_k_connected
from .construct import verify_theorem_instance
from .graph import Graph, delete_vertices, is_connected, min_degree
from .io import emit_graph6, parse_graph6, read_graphs
from .mader import SearchExhausted, check_diwan_tholiya, degree_threshold
from .spider import find_keeping_spider_bruteforce

WORKERS_ENV = "SPIDERKEEP_WORKERS"
SUITES = ("ckl", "fk-edge", "path", "diwan-tholiya")

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_CLAIM = 3


@dataclass
class VerificationReport:
    parameters: dict
    graphs_read: int = 0
    hypotheses_met: int = 0
    successes: int = 0
    failures: list[dict] = field(default_factory=list)
    wall_time: dict[str, float] = field(default_factory=dict)
    method_disagreements: list[str] = field(default_factory=list)
    claim_failures: list[dict] = field(default_factory=list)
    fallbacks: int = 0

    @property
    def exit_code(self) -> int:
        if self.failures:
            return EXIT_COUNTEREXAMPLE
        if self.claim_failures:
            return EXIT_CLAIM
        return EXIT_OK

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> VerificationReport:
        return cls(**data)


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        return max(1, int(raw))
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return os.cpu_count() or 1


def _run_pool(fn: Callable, tasks: Sequence, workers: int | None) -> list:
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(tasks) < 2:
        return [fn(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * workers))))


def _load(source) -> list[Graph]:
    if isinstance(source, (str, Path)):
        return read_graphs(source)
    return list(source)


# -- theorem ---------------------------------------------------------------

def _theorem_task(args: tuple) -> dict:
    g6, k, m, t, method, strict = args
    verdict = verify_theorem_instance(parse_graph6(g6), k, t, m, method=method, strict=strict)
    return {"graph6": g6, **verdict.to_dict()}


def verify_corpus(source, k: int, m: int, t: int, method: str = "both", strict: bool = False,
                  workers: int | None = None, timings: bool = False) -> VerificationReport:
    """Check the spider theorem on every graph of ``source`` (a path or graphs)."""
    report = VerificationReport(parameters={"suite": "theorem", "k": k, "m": m, "t": t, "method": method, "strict": strict})
    t0 = time.perf_counter()
    graphs = _load(source)
    t1 = time.perf_counter()
    results = _run_pool(_theorem_task, [(emit_graph6(g), k, m, t, method, strict) for g in graphs], workers)
    t2 = time.perf_counter()

    report.graphs_read = len(graphs)
    for res in results:
        if res["status"] == "skipped":
            continue
        report.hypotheses_met += 1
        if res["status"] == "ok":
            report.successes += 1
        else:
            report.failures.append({"graph6": res["graph6"], "verdict": res["status"]})
        if res["method_agreement"] is False:
            report.method_disagreements.append(res["graph6"])
        cons = res.get("constructive")
        if cons:
            report.fallbacks += int(cons["fallback_used"])
            for claim in cons["claim_failures"]:
                report.claim_failures.append({"graph6": res["graph6"], **claim})
    if timings:
        report.wall_time = {"read": round(t1 - t0, 6), "verify": round(t2 - t1, 6)}
    return report


# -- prior results ---------------------------------------------------------

def ckl_vertex(g: Graph, k: int) -> int | None:
    """A vertex x with G - x still k-connected, if any."""
    for x in g.vertices:
        if g.n > 1 and is_k_connected(delete_vertices(g, [x])[0], k):
            return x
    return None


def fk_edge(g: Graph, k: int) -> tuple[int, int] | None:
    """An edge xy with G - {x, y} still k-connected, if any."""
    for x, y in g.edges():
        if g.n > 2 and is_k_connected(delete_vertices(g, [x, y])[0], k):
            return x, y
    return None


def _ckl_task(args: tuple) -> list[dict]:
    g6, k, _m = args
    g = parse_graph6(g6)
    # K_{k+1} minus a vertex is K_k, never k-connected; only K_2 meets the degree floor
    if g.n < k + 2 or not (is_k_connected(g, k) and min_degree(g) >= 3 * k // 2):
        return []
    x = ckl_vertex(g, k)
    return [{"graph6": g6, "ok": x is not None, "witness": x}]


def _fk_task(args: tuple) -> list[dict]:
    g6, k, _m = args
    g = parse_graph6(g6)
    if not (is_k_connected(g, k) and min_degree(g) >= 3 * k // 2 + 2):
        return []
    e = fk_edge(g, k)
    return [{"graph6": g6, "ok": e is not None, "witness": list(e) if e else None}]


def _path_task(args: tuple) -> list[dict]:
    g6, k, m = args
    g = parse_graph6(g6)
    if not (is_k_connected(g, k) and min_degree(g) >= degree_threshold(k, m)):
        return []
    if m == 1:
        x = ckl_vertex(g, k)
        return [{"graph6": g6, "ok": x is not None, "witness": None if x is None else [x]}]
    emb = find_keeping_spider_bruteforce(g, k, 0, m)
    return [{"graph6": g6, "ok": emb is not None, "witness": emb.to_dict() if emb else None}]


def small_trees(max_order: int) -> list[Graph]:
    """One tree per isomorphism class, orders 1..max_order."""
    import networkx as nx

    out = [Graph.empty(1)]
    for d in range(2, max_order + 1):
        for tree in nx.nonisomorphic_trees(d):
            out.append(Graph.from_edges(d, tree.edges()))
    return out


def _dt_task(args: tuple) -> list[dict]:
    g6, _k, m = args
    g = parse_graph6(g6)
    if not is_connected(g):
        return []
    rows = []
    for tree in small_trees(m):
        if min_degree(g) < tree.n:
            continue
        try:
            emb = check_diwan_tholiya(g, tree)
            rows.append({"graph6": g6, "ok": True, "witness": [emb[i] for i in range(tree.n)]})
        except SearchExhausted:
            rows.append({"graph6": g6, "ok": False, "witness": None, "tree": tree.edges()})
    return rows


_SUITE_TASKS = {"ckl": _ckl_task, "fk-edge": _fk_task, "path": _path_task, "diwan-tholiya": _dt_task}


def run_suite(suite: str, source, k: int, m: int = 1, workers: int | None = None,
              timings: bool = False) -> VerificationReport:
    if suite not in _SUITE_TASKS:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    report = VerificationReport(parameters={"suite": suite, "k": k, "m": m})
    t0 = time.perf_counter()
    graphs = _load(source)
    t1 = time.perf_counter()
    results = _run_pool(_SUITE_TASKS[suite], [(emit_graph6(g), k, m) for g in graphs], workers)
    t2 = time.perf_counter()
    report.graphs_read = len(graphs)
    for rows in results:
        for row in rows:
            report.hypotheses_met += 1
            if row["ok"]:
                report.successes += 1
            else:
                report.failures.append({"graph6": row["graph6"], "verdict": "counterexample"})
    if timings:
        report.wall_time = {"read": round(t1 - t0, 6), "verify": round(t2 - t1, 6)}
    return report


def check_ckl(source, k: int, **kw) -> VerificationReport:
    return run_suite("ckl", source, k, **kw)


def check_fk_edge(source, k: int, **kw) -> VerificationReport:
    return run_suite("fk-edge", source, k, **kw)


def check_path_case(source, k: int, m: int, **kw) -> VerificationReport:
    return run_suite("path", source, k, m, **kw)


def check_diwan_tholiya_corpus(source, max_order: int, **kw) -> VerificationReport:
    return run_suite("diwan-tholiya", source, 1, max_order, **kw)


# -- output ----------------------------------------------------------------

def emit_report(report: VerificationReport, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    if fmt == "table":
        return _table(report)
    raise ValueError(f"unknown report format {fmt!r}")


def _table(report: VerificationReport) -> str:
    params = ", ".join(f"{key}={val}" for key, val in report.parameters.items())
    rows = [
        ("parameters", params),
        ("graphs read", report.graphs_read),
        ("hypotheses met", report.hypotheses_met),
        ("successes", report.successes),
        ("failures", len(report.failures)),
        ("method disagreements", len(report.method_disagreements)),
        ("claim failures", len(report.claim_failures)),
        ("fallbacks", report.fallbacks),
    ]
    rows += [(f"time {phase} (s)", f"{sec:.3f}") for phase, sec in report.wall_time.items()]
    width = max(len(label) for label, _ in rows)
    lines = [f"{label:<{width}}  {value}" for label, value in rows]
    for fail in report.failures:
        lines.append(f"{'FAIL':<{width}}  {fail['graph6']}  {fail['verdict']}")
    return "\n".join(lines) + "\n"


def failure_graphs(report: VerificationReport) -> Iterable[Graph]:
    for fail in report.failures:
        yield parse_graph6(fail["graph6"])


# -- seeded theorem sweep --------------------------------------------------

def sweep_corpus(seed: int, k: int, m: int, count: int, n_max: int = 14) -> list[Graph]:
    """Apex graphs meeting the theorem's degree floor, orders drawn up to ``n_max``.

    For k = 1 the order n = threshold + 1 is skipped: it admits only K_{m+1},
    where removing m vertices leaves K_1.
    """
    import random

    from .generate import GeneratorConfig, generate_corpus

    rng = random.Random(f"{seed}:{k}:{m}")
    need = degree_threshold(k, m)
    n_lo = need + (2 if k == 1 else 1)
    if n_lo > n_max:
        raise ValueError(f"n_max={n_max} below the smallest admissible order {n_lo}")
    graphs = []
    for _ in range(count):
        n = rng.randint(n_lo, n_max)
        cfg = GeneratorConfig(n=n, k=k, delta_min=need, apex=True, count=1,
                              seed=rng.randrange(2**32), family="mixed")
        graphs.extend(generate_corpus(cfg))
    return graphs


def theorem_sweep(seed: int, ks=(1, 2), ms=(2, 3, 4), per_cell: int = 200, n_max: int = 14,
                  method: str = "both", workers: int | None = None) -> list[VerificationReport]:
    """One report per (k, m, t) cell; the graphs of a (k, m) pair are shared across t."""
    reports = []
    for k in ks:
        for m in ms:
            graphs = sweep_corpus(seed, k, m, per_cell, n_max)
            for t in range(m - 1):
                rep = verify_corpus(graphs, k, m, t, method=method, workers=workers)
                rep.parameters["seed"] = seed
                reports.append(rep)
    return reports


def sweep_json(reports: list[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"
