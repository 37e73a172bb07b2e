"""Immutable undirected simple graphs over integer vertex ids.

Vertex ids are opaque, totally ordered and stable: operations that shrink a
graph return a new value sharing nothing mutable with the old one, so solver
branches can hold snapshots without copying defensively.  All iteration
orders exposed here are ascending by id, which keeps search trees and
reports reproducible.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class Graph:
    """Undirected simple graph: no self-loops, no parallel edges."""

    __slots__ = ("_adj",)

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise KeyError(f"edge ({u}, {v}) references an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(adj[v]) for v in sorted(adj)}

    @classmethod
    def _from_adj(cls, adj: dict[int, frozenset[int]]) -> Graph:
        g = object.__new__(cls)
        g._adj = {v: adj[v] for v in sorted(adj)}
        return g

    # -- basic queries ------------------------------------------------------

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._adj)

    def sorted_vertices(self) -> list[int]:
        return list(self._adj)  # keys inserted in ascending order

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(frozenset((v, nbrs) for v, nbrs in self._adj.items()))

    def __repr__(self) -> str:
        return f"Graph(|V|={len(self._adj)}, |E|={self.edge_count()})"

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in self._adj:
            for u in self._adj[v]:
                if v < u:
                    yield (v, u)

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    # -- derived graphs -----------------------------------------------------

    def delete(self, removed: Iterable[int]) -> Graph:
        """Graph with the given vertices (and their edges) removed."""
        gone = set(removed)
        missing = gone - self._adj.keys()
        if missing:
            raise KeyError(f"unknown vertices: {sorted(missing)}")
        return Graph._from_adj(
            {v: nbrs - gone for v, nbrs in self._adj.items() if v not in gone}
        )

    def induced(self, keep: Iterable[int]) -> Graph:
        """Subgraph induced on the given vertex set."""
        kept = set(keep)
        missing = kept - self._adj.keys()
        if missing:
            raise KeyError(f"unknown vertices: {sorted(missing)}")
        return Graph._from_adj({v: self._adj[v] & kept for v in kept})

    def contract(self, u: int, v: int) -> tuple[Graph, dict[int, frozenset[int]]]:
        """Contract the edge (u, v); the merged vertex keeps the smaller id.

        Requires disjoint neighborhoods (beyond the edge itself), so the
        result has exactly one edge and one vertex fewer.  Returns the new
        graph and a record {merged_id: {u, v}} for lifting solutions back.
        """
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        shared = (self._adj[u] & self._adj[v]) - {u, v}
        if shared:
            raise ValueError(f"({u}, {v}) have shared neighbors {sorted(shared)}")
        merged = min(u, v)
        new_nbrs = (self._adj[u] | self._adj[v]) - {u, v}
        adj = {w: nbrs for w, nbrs in self._adj.items() if w not in (u, v)}
        for w in new_nbrs:
            adj[w] = (adj[w] - {u, v}) | {merged}
        adj[merged] = frozenset(new_nbrs)
        return Graph._from_adj(adj), {merged: frozenset((u, v))}

    # -- structure ----------------------------------------------------------

    def is_forest(self) -> bool:
        return is_acyclic_without(self, ())

    def components(self) -> list[frozenset[int]]:
        """Connected components, ordered by their minimum vertex id."""
        seen: set[int] = set()
        out: list[frozenset[int]] = []
        for start in self._adj:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def cycle_through(self, v: int) -> tuple[int, ...] | None:
        """Some simple cycle containing v, or None if v lies on no cycle.

        v lies on a cycle iff two of its neighbors are connected in G - v;
        the cycle returned is v plus a shortest such connecting path, with
        ties broken by ascending id, so the result is deterministic.
        """
        nbrs = sorted(self._adj[v])
        if len(nbrs) < 2:
            return None
        # BFS from each neighbor in G - v until another neighbor is reached.
        nbr_set = self._adj[v]
        for u in nbrs:
            parent: dict[int, int | None] = {u: None}
            queue = [u]
            while queue:
                nxt: list[int] = []
                for x in queue:
                    for y in sorted(self._adj[x]):
                        if y == v or y in parent:
                            continue
                        parent[y] = x
                        if y in nbr_set:
                            path = [y]
                            while path[-1] != u:
                                path.append(parent[path[-1]])  # type: ignore[arg-type]
                            return (v, *reversed(path))
                        nxt.append(y)
                queue = nxt
        return None


def is_acyclic_without(g: Graph, removed: Iterable[int]) -> bool:
    """True iff g minus the given vertices is a forest (union-find scan)."""
    gone = set(removed)
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for v in g._adj:
        if v in gone:
            continue
        parent[v] = v
    for v in parent:
        for u in g._adj[v]:
            if u <= v or u in gone:
                continue
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
    return True
