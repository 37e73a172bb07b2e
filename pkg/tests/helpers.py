"""Shared constructions and independent mini-oracles used across tests."""

from __future__ import annotations

import random
from itertools import combinations

from mmfvs.graph import Graph


def apex_pair(n: int = 6) -> Graph:
    """Two adjacent hubs (0, 1) covering independent vertices 2..n-1."""
    edges = [(0, 1)] + [(h, v) for v in range(2, n) for h in (0, 1)]
    return Graph(range(n), edges)


def cycle(n: int) -> Graph:
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(range(n), [(u, v) for u in range(n) for v in range(u + 1, n)])


def disjoint_triangles(count: int) -> Graph:
    edges = []
    for t in range(count):
        b = 3 * t
        edges += [(b, b + 1), (b + 1, b + 2), (b, b + 2)]
    return Graph(range(3 * count), edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(
        range(n),
        [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p],
    )


def brute_cycle_vertices(g: Graph) -> set[int]:
    """Vertices lying on some simple cycle, by exhaustive subset checking.

    A vertex set T carries a simple cycle visiting all of T iff the induced
    subgraph is connected with every degree exactly 2.
    """
    on_cycle: set[int] = set()
    vs = g.sorted_vertices()
    for size in range(3, len(vs) + 1):
        for subset in combinations(vs, size):
            t = set(subset)
            degs = [len(g.neighbors(v) & t) for v in subset]
            if any(d != 2 for d in degs):
                continue
            if len(Graph(t, [(u, v) for u, v in g.edges() if u in t and v in t]).components()) == 1:
                on_cycle |= t
    return on_cycle


def brute_min_vertex_cover_size(g: Graph) -> int:
    edges = list(g.edges())
    vs = g.sorted_vertices()
    for size in range(len(vs) + 1):
        for subset in combinations(vs, size):
            s = set(subset)
            if all(u in s or v in s for u, v in edges):
                return size
    raise AssertionError("V itself always covers")


def nx_to_graph(nxg) -> Graph:
    relabel = {v: i for i, v in enumerate(sorted(nxg.nodes(), key=str))}
    return Graph(
        range(nxg.number_of_nodes()),
        [(relabel[u], relabel[v]) for u, v in nxg.edges()],
    )


def connected_atlas(max_n: int) -> list[Graph]:
    """All connected graphs with 1..max_n vertices, up to isomorphism.

    Backed by the networkx graph atlas, so max_n <= 7.
    """
    import networkx as nx

    assert max_n <= 7
    out = []
    for nxg in nx.graph_atlas_g()[1:]:
        if 1 <= nxg.number_of_nodes() <= max_n and nx.is_connected(nxg):
            out.append(nx_to_graph(nxg))
    return out


def atlas_all_graphs(max_n: int) -> list[Graph]:
    """All graphs (connected or not) with 0..max_n vertices, up to isomorphism."""
    import networkx as nx

    assert max_n <= 7
    return [
        nx_to_graph(nxg)
        for nxg in nx.graph_atlas_g()
        if nxg.number_of_nodes() <= max_n
    ]
