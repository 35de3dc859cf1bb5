"""Constructors for the extremal and exceptional graph families, plus a seeded G(n, p)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError
from .graph import Edge, Graph, bipartition, empty_graph, is_connected, join

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class FamilyBSpec:
    """Parameters of one member of B(delta, k).

    X has ``x_size`` vertices of common degree d, Y has x_size + k vertices of
    degree delta, and d * |X| = delta * |Y|.
    """

    delta: int
    k: int
    x_size: int

    def __post_init__(self):
        if self.delta < 1:
            raise DomainError(f"delta must be >= 1, got {self.delta}")
        if self.k < 1:
            raise DomainError(f"k must be >= 1, got {self.k}")
        if self.delta > self.x_size:
            raise DomainError(f"need delta <= |X|, got delta={self.delta}, |X|={self.x_size}")
        if (self.delta * self.y_size) % self.x_size:
            raise DomainError(
                f"(H1) fails: |X|={self.x_size} does not divide delta*|Y|={self.delta * self.y_size}"
            )

    @property
    def y_size(self) -> int:
        return self.x_size + self.k

    @property
    def d(self) -> int:
        """Common degree of the X side."""
        return self.delta * self.y_size // self.x_size

    @property
    def n(self) -> int:
        return self.x_size + self.y_size


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q}; the first p indices form one side."""
    if p < 0 or q < 0:
        raise DomainError(f"part sizes must be non-negative, got {p}, {q}")
    return Graph.from_edges(p + q, ((i, p + j) for i in range(p) for j in range(q)))


def minimal_x_size(delta: int, k: int) -> int:
    """Smallest |X| >= delta admitting a member of B(delta, k); |X| = delta always works."""
    m = delta
    while (delta * (m + k)) % m:
        m += 1
    return m


def family_b(spec: FamilyBSpec) -> tuple[Graph, bool]:
    """Round-robin member of B(delta, k), with its connectivity.

    X = 0..m-1, Y = m..2m+k-1. Edge number l joins y_(l // delta) to
    x_(l mod m), so each y gets delta consecutive x's (distinct since
    delta <= m) and the x's are hit equally often. The result need not be
    connected.
    """
    m, delta = spec.x_size, spec.delta
    edges = [(l % m, m + l // delta) for l in range(delta * spec.y_size)]
    g = Graph.from_edges(spec.n, edges)
    _verify_family_b(g, spec)
    return g, is_connected(g)


def _verify_family_b(g: Graph, spec: FamilyBSpec) -> None:
    m = spec.x_size
    if g.num_edges != spec.delta * spec.y_size:
        raise DomainError("construction produced parallel edges")
    if any(len(g.adj[x]) != spec.d for x in range(m)):
        raise DomainError("(H1) fails: X side is not regular")
    if any(len(g.adj[y]) != spec.delta for y in range(m, spec.n)):
        raise DomainError("(H2) fails: Y side degree differs from delta")
    if spec.n - 2 * m != spec.k:
        raise DomainError("(H3) fails: |Y| != |X| + k")


def family_b_specs(max_x: int, max_k: int) -> Iterator[FamilyBSpec]:
    """Every valid (delta, k, |X|) with |X| <= max_x and k <= max_k."""
    for m in range(1, max_x + 1):
        for delta in range(1, m + 1):
            for k in range(1, max_k + 1):
                if (delta * (m + k)) % m == 0:
                    yield FamilyBSpec(delta, k, m)


def family_b_membership(g: Graph) -> int | None:
    """k such that the connected graph g lies in B(delta(g), k), else None.

    A connected bipartite graph has a unique bipartition, so membership is a
    direct degree check; Y is the larger side.
    """
    if g.n < 2 or not is_connected(g):
        return None
    parts = bipartition(g)
    if parts is None:
        return None
    x, y = sorted(parts, key=len)
    k = len(y) - len(x)
    if k < 1:
        return None
    delta = min(len(r) for r in g.adj)
    if delta > len(x):
        return None
    if len({len(g.adj[v]) for v in x}) != 1 or any(len(g.adj[v]) != delta for v in y):
        return None
    return k


def join_exception(delta: int, h_edges: Iterable[Edge]) -> Graph:
    """(delta+1)K_1 joined with a graph H on delta vertices.

    The delta+1 independent vertices are 0..delta and H occupies
    delta+1..2*delta, so V(H) = range(delta + 1, 2 * delta + 1).
    """
    if delta < 1:
        raise DomainError(f"delta must be >= 1, got {delta}")
    h = Graph.from_edges(delta, h_edges)
    return join(empty_graph(delta + 1), h)


def _splitmix64(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) driven by SplitMix64 seeded with ``seed``.

    Pairs (i, j), i < j, are visited with i outer and j inner, both
    ascending; each draws u = (next() >> 11) / 2**53 and becomes an edge
    iff u < p.
    """
    if not 0 <= p <= 1:
        raise DomainError(f"p must lie in [0, 1], got {p}")
    state = seed & _MASK64
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            state, z = _splitmix64(state)
            if (z >> 11) * 2.0**-53 < p:
                edges.append((i, j))
    return Graph.from_edges(n, edges)
