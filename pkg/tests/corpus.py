"""Exhaustive small-graph corpora for the acceptance suite.

Connected graphs with at most 7 vertices come from the networkx atlas;
8-vertex ones are produced by attaching a new vertex to every nonempty
subset of every connected 7-vertex graph (every connected graph has a
non-cut vertex, so this reaches all of them) and deduping up to
isomorphism via Weisfeiler-Lehman hash buckets plus exact checks.
"""

from __future__ import annotations

from itertools import combinations

from mmfvs.graph import Graph

from helpers import connected_atlas, nx_to_graph

# connected graphs up to isomorphism, by vertex count
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def _to_nx(g: Graph):
    import networkx as nx

    nxg = nx.Graph()
    nxg.add_nodes_from(g.sorted_vertices())
    nxg.add_edges_from(g.edges())
    return nxg


def connected_graphs_up_to_8() -> list[Graph]:
    import networkx as nx

    graphs = connected_atlas(7)
    seven = [g for g in graphs if len(g) == 7]
    assert len(seven) == CONNECTED_COUNTS[7]

    buckets: dict[tuple, list] = {}
    eights: list[Graph] = []
    for g in seven:
        base = _to_nx(g)
        for r in range(1, 8):
            for attach in combinations(range(7), r):
                cand = base.copy()
                cand.add_node(7)
                cand.add_edges_from((7, v) for v in attach)
                degs = tuple(sorted(d for _, d in cand.degree()))
                wl = nx.weisfeiler_lehman_graph_hash(cand, iterations=3)
                key = (degs, wl)
                known = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(cand, other) for other in known):
                    continue
                known.append(cand)
                eights.append(nx_to_graph(cand))
    assert len(eights) == CONNECTED_COUNTS[8], len(eights)
    return graphs + eights
