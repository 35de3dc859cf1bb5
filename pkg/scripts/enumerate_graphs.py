#!/usr/bin/env python3
"""Enumerate all graphs up to isomorphism on n <= N vertices, write connected ones as graph6.

Dev tool for building the test corpus; needs networkx. Every graph on n
vertices arises from one on n-1 vertices by adding a vertex, so each level
is the deduplicated set of one-vertex extensions of the previous level.

Usage: python scripts/enumerate_graphs.py MAX_N OUT_FILE
"""

from __future__ import annotations

import sys
from collections import defaultdict
from itertools import combinations

import networkx as nx
import numpy as np

# OEIS A000088 / A001349
KNOWN_TOTAL = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}
KNOWN_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}


def _key(g: nx.Graph):
    a = nx.to_numpy_array(g, nodelist=range(g.number_of_nodes()))
    spec = tuple(np.round(np.linalg.eigvalsh(a), 6) + 0.0)
    return (g.number_of_edges(), tuple(sorted(d for _, d in g.degree())), spec)


def extend(level: list[nx.Graph], n: int) -> list[nx.Graph]:
    buckets: dict[tuple, list[nx.Graph]] = defaultdict(list)
    out = []
    for base in level:
        for r in range(n):
            for nbrs in combinations(range(n - 1), r):
                g = base.copy()
                g.add_node(n - 1)
                g.add_edges_from((n - 1, u) for u in nbrs)
                bucket = buckets[_key(g)]
                if any(nx.is_isomorphic(g, h) for h in bucket):
                    continue
                bucket.append(g)
                out.append(g)
    return out


def main() -> None:
    max_n, out_path = int(sys.argv[1]), sys.argv[2]
    g1 = nx.empty_graph(1)
    level = [g1]
    lines = []
    for n in range(1, max_n + 1):
        if n > 1:
            level = extend(level, n)
        conn = [g for g in level if nx.is_connected(g)]
        assert len(level) == KNOWN_TOTAL[n], (n, len(level))
        assert len(conn) == KNOWN_CONNECTED[n], (n, len(conn))
        print(f"n={n}: {len(level)} graphs, {len(conn)} connected", file=sys.stderr)
        lines.extend(nx.to_graph6_bytes(g, header=False).decode().strip() for g in conn)
    with open(out_path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
