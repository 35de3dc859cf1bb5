import pytest
from hypothesis import given

from specmatch.errors import GraphError
from specmatch.graph import (
    Graph,
    bipartition,
    complement,
    complete_graph,
    components,
    cycle_graph,
    degree_profile,
    delete_vertices,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    is_connected,
    isolated_count,
    isolated_vertices,
    join,
    min_degree,
    path_graph,
)

from strategies import graphs


def test_from_edges_rejects_bad_input():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(2, (frozenset({1}), frozenset()))


def test_duplicate_edges_collapse():
    g = Graph.from_edges(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edges() == [(0, 1)]


def test_standard_graphs():
    assert complete_graph(5).num_edges == 10
    assert cycle_graph(5).edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert path_graph(4).num_edges == 3
    assert empty_graph(4).num_edges == 0


def test_join_and_union_index_shift():
    g = join(empty_graph(2), complete_graph(2))
    assert g.edges() == [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    u = disjoint_union(path_graph(2), path_graph(2))
    assert u.edges() == [(0, 1), (2, 3)]


def test_delete_vertices_reports_kept_order():
    g = cycle_graph(5)
    h, kept = delete_vertices(g, [1])
    assert kept == [0, 2, 3, 4]
    assert h.edges() == [(0, 3), (1, 2), (2, 3)]
    assert isolated_count(delete_vertices(join(empty_graph(3), empty_graph(2)), [3, 4])[0]) == 3


def test_induced_subgraph_follows_given_order():
    g = path_graph(4)
    assert induced_subgraph(g, [2, 1, 0]).edges() == [(0, 1), (1, 2)]


def test_components_and_connectivity():
    g = disjoint_union(cycle_graph(3), empty_graph(1))
    assert components(g) == [[0, 1, 2], [3]]
    assert not is_connected(g)
    assert is_connected(complete_graph(1))
    assert isolated_vertices(g) == [3]


def test_bipartition():
    parts = bipartition(path_graph(4))
    assert parts == (frozenset({0, 2}), frozenset({1, 3}))
    assert bipartition(cycle_graph(5)) is None


def test_degree_profile():
    p = degree_profile(join(empty_graph(1), empty_graph(3)))
    assert p.degrees == (3, 1, 1, 1)
    assert (p.min_degree, p.max_degree) == (1, 3)


@given(graphs())
def test_complement_is_involution(g):
    c = complement(g)
    assert complement(c) == g
    assert g.num_edges + c.num_edges == g.n * (g.n - 1) // 2


@given(graphs())
def test_min_degree_matches_adjacency(g):
    if g.n:
        assert min_degree(g) == min(g.degree(v) for v in range(g.n))
