"""Parameter-preserving transformation from Max Min Vertex Cover.

A graph g with target k maps to g' with target k + n + 2: an apex vertex
adjacent to all of g and to a pad of n + 3 fresh vertices, which a new
anchor vertex also covers.  Minimal vertex covers of size >= k in g then
correspond exactly to minimal feedback vertex sets of size >= k + n + 2 in
g', while the vertex cover number grows by at most 2, so the construction
transfers hardness between the two problems parameterized by vertex cover.
"""

from __future__ import annotations

from dataclasses import dataclass

from mmfvs.graph import Graph
from mmfvs.oracle import DEFAULT_CAP, opt_mmfvs_brute, opt_mmvc_brute


@dataclass(frozen=True)
class PptInstance:
    """Transformed instance plus the gadget vertex tags tests inspect."""

    graph: Graph
    k_prime: int
    apex: int
    pads: frozenset[int]
    anchor: int


def ppt_mmvc_to_mmfvs(g: Graph, k: int) -> PptInstance:
    """Build the transformed instance (fresh ids above the input's)."""
    n = len(g)
    base = max(g.vertices, default=-1) + 1
    apex = base
    pads = frozenset(range(base + 1, base + n + 4))
    anchor = base + n + 4
    vertices = list(g.vertices) + [apex, *sorted(pads), anchor]
    edges = list(g.edges())
    edges.extend((apex, v) for v in g.sorted_vertices())
    edges.extend((apex, p) for p in sorted(pads))
    edges.extend((anchor, p) for p in sorted(pads))
    return PptInstance(
        graph=Graph(vertices, edges),
        k_prime=k + n + 2,
        apex=apex,
        pads=pads,
        anchor=anchor,
    )


def check_ppt_equivalence(g: Graph, k: int, cap: int = DEFAULT_CAP) -> bool:
    """Do the two decision questions agree on this instance?"""
    ppt = ppt_mmvc_to_mmfvs(g, k)
    left = opt_mmvc_brute(g, cap=cap).opt_value >= k
    right = opt_mmfvs_brute(ppt.graph, cap=cap).opt_value >= ppt.k_prime
    return left == right
