import networkx as nx
import pytest
from hypothesis import given

from specmatch.errors import Graph6Error
from specmatch.graph import Graph, complete_graph, empty_graph
from specmatch.graph6 import HEADER, parse_graph6, write_graph6
from specmatch.families import complete_bipartite

from strategies import graphs


@pytest.mark.parametrize(
    "text, edges",
    [
        ("@", []),
        ("A_", [(0, 1)]),
        ("D?{", [(0, 4), (1, 4), (2, 4), (3, 4)]),
        ("D]o", complete_bipartite(2, 3).edges()),
    ],
)
def test_known_vectors(text, edges):
    g = parse_graph6(text)
    assert g.edges() == edges
    assert write_graph6(g) == text


def test_header_and_whitespace_are_ignored():
    assert parse_graph6(HEADER + "A_\n") == complete_graph(2)


def test_empty_graph_on_zero_vertices():
    assert write_graph6(empty_graph(0)) == "?"
    assert parse_graph6("?").n == 0


def test_medium_size_field():
    g = Graph.from_edges(70, [(0, 69)])
    text = write_graph6(g)
    assert text[0] == "~"
    assert parse_graph6(text) == g


@pytest.mark.parametrize(
    "bad, offset",
    [("", 0), ("D?", None), ("D?{{", None), ("A`", 1), ("D? {", 2)],
)
def test_malformed_input_names_offset(bad, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(bad)
    if offset is not None:
        assert f"byte offset {offset}" in str(info.value)


@given(graphs(max_n=12))
def test_round_trip_and_networkx_agreement(g):
    text = write_graph6(g)
    assert parse_graph6(text) == g
    h = nx.from_graph6_bytes(text.encode())
    assert sorted(tuple(sorted(e)) for e in h.edges()) == g.edges()
