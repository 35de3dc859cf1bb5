"""Fractional matching numbers, witnesses and the fractional Berge-Tutte deficiency.

mu_f(G) is computed as half the maximum matching size of the bipartite double
cover G x K2. A maximum matching there lifts back to an optimal fractional
matching of G with weights in {0, 1/2, 1}. The exhaustive deficiency search
over all vertex subsets is kept alongside as a certifier for small graphs.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from .errors import DomainError, NotBipartiteError
from .graph import Edge, Graph, bipartition

DEFAULT_BRUTE_CAP = 20
_HALF = Fraction(1, 2)


@dataclass(frozen=True, order=True)
class HalfInt:
    """A non-negative multiple of 1/2, stored as twice its value."""

    twice_value: int

    def __post_init__(self):
        if self.twice_value < 0:
            raise DomainError(f"HalfInt must be non-negative, got {self.twice_value}/2")

    @classmethod
    def from_value(cls, x) -> HalfInt:
        twice = Fraction(x) * 2
        if twice.denominator != 1:
            raise DomainError(f"{x} is not a multiple of 1/2")
        return cls(int(twice))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    def __float__(self) -> float:
        return self.twice_value / 2

    def __str__(self) -> str:
        if self.twice_value % 2 == 0:
            return str(self.twice_value // 2)
        return f"{self.twice_value}/2"


@dataclass(frozen=True)
class FractionalMatching:
    """Edge weights in {0, 1/2, 1}, keyed by (u, v) with u < v; absent edges weigh 0."""

    weights: Mapping[Edge, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (u, v), w in self.weights.items():
            if u > v:
                u, v = v, u
            w = Fraction(w)
            if w not in (0, _HALF, 1):
                raise DomainError(f"weight {w} on edge {u}-{v} is not in {{0, 1/2, 1}}")
            if w:
                clean[(u, v)] = w
        object.__setattr__(self, "weights", dict(sorted(clean.items())))

    @property
    def total(self) -> HalfInt:
        return HalfInt(sum(int(2 * w) for w in self.weights.values()))

    def as_triples(self) -> list[tuple[int, int, int]]:
        """(u, v, numerator) with weight = numerator / 2, zero weights omitted."""
        return [(u, v, int(2 * w)) for (u, v), w in self.weights.items()]


@dataclass(frozen=True)
class DeficiencyWitness:
    set_s: tuple[int, ...]
    isolated_t: tuple[int, ...]
    value: int


class MatchingCheck(NamedTuple):
    valid: bool
    total: HalfInt
    problems: tuple[str, ...]


def brute_cap() -> int:
    return int(os.environ.get("SPECMATCH_BRUTE_CAP", DEFAULT_BRUTE_CAP))


def double_cover(g: Graph) -> Graph:
    """Bipartite double cover G x K2: vertex v becomes v and v + n."""
    n = g.n
    edges = []
    for u, v in g.edges():
        edges.append((u, n + v))
        edges.append((v, n + u))
    return Graph.from_edges(2 * n, edges)


def _hopcroft_karp(left: Sequence[int], adj: Mapping[int, Sequence[int]]) -> dict[int, int]:
    """Maximum matching of a bipartite graph given by left vertices and their neighbor lists.

    Returns the matching as {left vertex: right vertex}.
    """
    match_l: dict[int, int] = {}
    match_r: dict[int, int] = {}
    while True:
        dist: dict[int, int] = {}
        queue = deque()
        for u in left:
            if u not in match_l:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                x = match_r.get(w)
                if x is None:
                    found = True
                elif x not in dist:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        if not found:
            return match_l

        for root in left:
            if root in match_l:
                continue
            # iterative layered DFS; each frame is [vertex, neighbor iterator, chosen neighbor]
            stack = [[root, iter(adj[root]), None]]
            while stack:
                frame = stack[-1]
                u = frame[0]
                advanced = False
                for w in frame[1]:
                    x = match_r.get(w)
                    if x is None:
                        frame[2] = w
                        for fu, _, fw in stack:
                            match_l[fu] = fw
                            match_r[fw] = fu
                        stack = []
                        advanced = True
                        break
                    if dist.get(x) == dist[u] + 1:
                        frame[2] = w
                        stack.append([x, iter(adj[x]), None])
                        advanced = True
                        break
                if not advanced:
                    dist[u] = -1  # dead end for the rest of this phase
                    stack.pop()


def max_matching_bipartite(g: Graph) -> tuple[int, frozenset[Edge]]:
    """Maximum matching of a bipartite graph by Hopcroft-Karp augmenting paths."""
    parts = bipartition(g)
    if parts is None:
        raise NotBipartiteError("max_matching_bipartite needs a bipartite graph")
    left = sorted(parts[0])
    adj = {u: sorted(g.adj[u]) for u in left}
    matched = _hopcroft_karp(left, adj)
    edges = frozenset((min(u, w), max(u, w)) for u, w in matched.items())
    return len(edges), edges


def _cover_matching(g: Graph) -> dict[int, int]:
    n = g.n
    adj = {u: [n + v for v in sorted(g.adj[u])] for u in range(n)}
    return _hopcroft_karp(range(n), adj)


def fractional_matching_number(g: Graph) -> HalfInt:
    return HalfInt(len(_cover_matching(g)))


def fractional_matching_witness(g: Graph) -> FractionalMatching:
    """Optimal fractional matching read off a maximum matching of the double cover.

    Edge uv gets weight (number of its two lifts u-v' and v-u' that are matched) / 2.
    """
    n = g.n
    count: dict[Edge, int] = {}
    for u, w in _cover_matching(g).items():
        v = w - n
        key = (min(u, v), max(u, v))
        count[key] = count.get(key, 0) + 1
    return FractionalMatching({e: Fraction(c, 2) for e, c in count.items()})


def verify_fractional_matching(g: Graph, f: FractionalMatching) -> MatchingCheck:
    problems = []
    load = [Fraction(0)] * g.n
    for (u, v), w in f.weights.items():
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            problems.append(f"{u}-{v} is not an edge of the graph")
            continue
        load[u] += w
        load[v] += w
    problems += [f"vertex {v} has load {x} > 1" for v, x in enumerate(load) if x > 1]
    return MatchingCheck(not problems, f.total, tuple(problems))


def half_characteristic_witness(g: Graph, sub_edges: Iterable[Edge]) -> FractionalMatching:
    """All-1/2 weights on a subgraph of maximum degree at most 2."""
    edges = {(min(u, v), max(u, v)) for u, v in sub_edges}
    deg: dict[int, int] = {}
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise DomainError(f"{u}-{v} is not an edge of the graph")
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    over = [v for v, d in deg.items() if d > 2]
    if over:
        raise DomainError(f"edge subset has degree > 2 at vertices {sorted(over)}")
    return FractionalMatching({e: _HALF for e in edges})


def deficiency_of(g: Graph, s: Iterable[int]) -> DeficiencyWitness:
    """i(G - S) - |S| for one vertex set S, with the isolated set T named."""
    s = frozenset(s)
    if any(not 0 <= v < g.n for v in s):
        raise DomainError("vertex set has indices out of range")
    t = tuple(v for v in range(g.n) if v not in s and g.adj[v] <= s)
    return DeficiencyWitness(tuple(sorted(s)), t, len(t) - len(s))


def deficiency_bruteforce(g: Graph, cap: int | None = None) -> DeficiencyWitness:
    """max over all S of i(G - S) - |S|, by exhaustive search over 2^n subsets.

    S = {} is included. Ties go to the lexicographically smallest membership
    string b_0 b_1 ... b_{n-1}; subsets are encoded with vertex v at bit
    n-1-v so that this is the smallest integer, i.e. the first argmax.
    """
    cap = brute_cap() if cap is None else cap
    n = g.n
    if n > cap:
        raise DomainError(f"brute-force deficiency capped at n={cap}, got n={n}")
    if n == 0:
        return DeficiencyWitness((), (), 0)
    subsets = np.arange(1 << n, dtype=np.int64)
    isolated = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        bit = 1 << (n - 1 - v)
        nb = sum(1 << (n - 1 - u) for u in g.adj[v])
        isolated += ((subsets & bit) == 0) & ((subsets & nb) == nb)
    score = isolated - np.bitwise_count(subsets).astype(np.int64)
    best = int(np.argmax(score))
    s = [v for v in range(n) if best >> (n - 1 - v) & 1]
    return deficiency_of(g, s)


def has_fractional_perfect_matching(g: Graph) -> bool:
    return fractional_matching_number(g).twice_value == g.n


def matching_number_bruteforce(g: Graph) -> int:
    """alpha'(G) for any graph by exhaustive branching; intended for n <= 12."""
    masks = g.masks

    @lru_cache(maxsize=None)
    def best(alive: int) -> int:
        if not alive:
            return 0
        v = (alive & -alive).bit_length() - 1
        rest = alive & ~(1 << v)
        result = best(rest)
        nbrs = masks[v] & rest
        while nbrs:
            low = nbrs & -nbrs
            result = max(result, 1 + best(rest & ~low))
            nbrs ^= low
        return result

    return best((1 << g.n) - 1)
