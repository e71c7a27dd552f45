#!/usr/bin/env python3
"""Write every connected graph on n vertices (2 <= n <= MAX_N), one file per n, graph6.

Uses pynauty canonical labelling to remove isomorphs. Each connected graph on n
vertices has a non-cut vertex, so extending every connected graph on n-1 vertices
by one vertex reaches all of them.
"""
import itertools
import sys
from pathlib import Path

import networkx as nx
import pynauty

EXPECTED = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def canonical(n, edges):
    adj = {v: [] for v in range(n)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    g = pynauty.Graph(n, adjacency_dict=adj)
    lab = pynauty.canon_label(g)
    inv = {old: new for new, old in enumerate(lab)}
    return tuple(sorted(tuple(sorted((inv[a], inv[b]))) for a, b in edges))


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    out = Path(sys.argv[2]) if len(sys.argv) > 2 else Path("crates/core/tests/data")
    out.mkdir(parents=True, exist_ok=True)
    level = {((0, 1),)}
    for n in range(2, max_n + 1):
        if n > 2:
            nxt = set()
            for edges in level:
                for k in range(1, n):
                    for nbrs in itertools.combinations(range(n - 1), k):
                        new = edges + tuple((v, n - 1) for v in nbrs)
                        nxt.add(canonical(n, new))
            level = nxt
        assert len(level) == EXPECTED[n], (n, len(level))
        lines = []
        for edges in level:
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(edges)
            lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
        lines.sort()
        (out / f"connected{n}.g6").write_text("\n".join(lines) + "\n")
        print(n, len(lines))


if __name__ == "__main__":
    main()
