"""Simple undirected graphs on vertices 0..n-1 and the operators used on them.

Graphs are immutable. Every operator returns a new graph whose vertices are
again dense integers; operators that drop or shift vertices document how the
old indices map onto the new ones.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of vertex {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if v not in self.adj[u]:
                    raise GraphError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(frozenset(r) for r in rows))

    def edges(self) -> list[Edge]:
        """Edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(r) for r in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as bitmasks, bit u set for each neighbor u."""
        return tuple(sum(1 << u for u in r) for r in self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    min_degree: int
    max_degree: int


def validate_graph(g: Graph) -> None:
    """Re-run the structural invariant checks; raises GraphError on failure."""
    Graph(g.n, g.adj)


def empty_graph(n: int) -> Graph:
    return Graph(n, tuple(frozenset() for _ in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complement(g: Graph) -> Graph:
    everyone = frozenset(range(g.n))
    return Graph(g.n, tuple(everyone - g.adj[v] - {v} for v in range(g.n)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Vertex-disjoint union; vertices of g2 are shifted up by g1.n."""
    shift = g1.n
    rows = list(g1.adj) + [frozenset(u + shift for u in r) for r in g2.adj]
    return Graph(g1.n + g2.n, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of g1 and g2 plus every edge between the two vertex classes."""
    n1, n = g1.n, g1.n + g2.n
    left = frozenset(range(n1))
    right = frozenset(range(n1, n))
    rows = [r | right for r in g1.adj]
    rows += [frozenset(u + n1 for u in r) | left for r in g2.adj]
    return Graph(n, tuple(rows))


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on V - s.

    Returns the new graph and the list ``kept`` with ``kept[new] == old``;
    surviving vertices keep their relative order.
    """
    removed = set(s)
    for v in removed:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    kept = [v for v in range(g.n) if v not in removed]
    return induced_subgraph(g, kept), kept


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled by position in that sequence."""
    index = {v: i for i, v in enumerate(vertices)}
    rows = tuple(frozenset(index[u] for u in g.adj[v] if u in index) for v in vertices)
    return Graph(len(vertices), rows)


def isolated_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if not g.adj[v]]


def isolated_count(g: Graph) -> int:
    return sum(1 for r in g.adj if not r)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp, queue = [], deque([root])
        while queue:
            v = queue.popleft()
            comp.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)[0]) == g.n


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-colouring of g, or None if g has an odd cycle.

    Each component is coloured by BFS from its smallest vertex, which lands in
    the first class; in particular isolated vertices go to the first class.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    first = frozenset(v for v in range(g.n) if color[v] == 0)
    return first, frozenset(range(g.n)) - first


def degree_profile(g: Graph) -> DegreeProfile:
    degrees = tuple(len(r) for r in g.adj)
    if not degrees:
        return DegreeProfile((), 0, 0)
    return DegreeProfile(degrees, min(degrees), max(degrees))


def min_degree(g: Graph) -> int:
    return min((len(r) for r in g.adj), default=0)
