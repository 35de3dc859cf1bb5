"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from specmatch.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, mask) if keep]
    if connected:
        # a random spanning tree keeps the graph connected
        parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
        edges += [(p, v) for v, p in enumerate(parents, 1)]
    return Graph.from_edges(n, edges)
