import random

import networkx as nx
import pytest
from hypothesis import given

from spiderkeep.graph import Graph
from spiderkeep.io import (
    FormatError,
    emit_edge_list,
    emit_graph6,
    iter_edge_list_blocks,
    parse_edge_list,
    parse_graph6,
    read_graphs,
    sniff_format,
    write_graphs,
)

from .strategies import graphs


def test_star_decodes():
    g = parse_graph6("D?{")
    assert g.n == 5
    assert g.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]


def test_small_encodings():
    assert emit_graph6(Graph.complete(1)) == "@"
    assert emit_graph6(Graph.complete(2)) == "A_"
    assert emit_graph6(Graph.empty(2)) == "A?"
    assert emit_graph6(Graph.complete(5)) == "D~{"


def test_header_is_accepted():
    assert parse_graph6(">>graph6<<D?{\n") == parse_graph6("D?{")


def test_long_size_field():
    g = Graph.cycle(70)
    text = emit_graph6(g)
    assert text[0] == "~"
    assert parse_graph6(text) == g


def test_matches_networkx_codec():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(1, 20)
        h = nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(10**6))
        ours = Graph.from_edges(n, h.edges())
        theirs = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert emit_graph6(ours) == theirs
        back = nx.from_graph6_bytes(theirs.encode())
        assert sorted(map(tuple, map(sorted, back.edges()))) == ours.edges()


@given(graphs(max_n=14))
def test_graph6_roundtrip(g):
    assert parse_graph6(emit_graph6(g)) == g


@given(graphs(max_n=10))
def test_edge_list_roundtrip(g):
    assert parse_edge_list(emit_edge_list(g)) == g


@pytest.mark.parametrize("bad", ["", "?", "D?", "D?{{", "D?|", "D ?{", "~~"])
def test_graph6_rejects(bad):
    with pytest.raises(FormatError):
        parse_graph6(bad)


def test_edge_list_example():
    g = parse_edge_list("4\n0 1\n1 2\n2 3\n1 0  # duplicate\n")
    assert g == Graph.path(4)


@pytest.mark.parametrize("bad", ["", "x\n", "3\n0 3\n", "3\n1 1\n", "3\n0 1 2\n", "3\na b\n"])
def test_edge_list_rejects(bad):
    with pytest.raises(FormatError):
        parse_edge_list(bad)


def test_edge_list_stream_blocks():
    text = write_graphs([Graph.path(3), Graph.complete(3)], "edges")
    assert list(iter_edge_list_blocks(text)) == [Graph.path(3), Graph.complete(3)]


def test_read_graphs_sniffs(tmp_path):
    p = tmp_path / "a.g6"
    p.write_text("D?{\nA_\n\n")
    assert [g.n for g in read_graphs(p)] == [5, 2]
    q = tmp_path / "a.edges"
    q.write_text(write_graphs([Graph.cycle(4)], "edges"))
    assert read_graphs(q) == [Graph.cycle(4)]
    assert read_graphs(p.rename(tmp_path / "a.dat"), fmt="g6")[0].n == 5
    with pytest.raises(FormatError):
        sniff_format("graphs.dat")
