"""Ground-truth predicates for feedback vertex sets and their minimality.

A set S is an fvs when G - S is acyclic, and a *minimal* fvs when no proper
subset is: equivalently, every v in S has a private cycle, a cycle through v
in the graph induced on (V - S) + v.  Minimality is certified here through
private cycles; the definitional drop-one-vertex test is also provided and
the two are asserted equal in the test suite.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from mmfvs.graph import Graph, is_acyclic_without

# Per-vertex private cycles witnessing minimality of a solution.
Certificate = dict[int, tuple[int, ...]]


def is_fvs(g: Graph, s: Iterable[int]) -> bool:
    """True iff g minus s is a forest."""
    s = frozenset(s)
    unknown = s - g.vertices
    if unknown:
        raise KeyError(f"unknown vertices: {sorted(unknown)}")
    return is_acyclic_without(g, s)


def private_cycle(g: Graph, v: int, banned: frozenset[int]) -> tuple[int, ...] | None:
    """A simple cycle through v avoiding `banned`, or None.

    Searches g restricted to (V - banned) + v: BFS between pairs of
    neighbors of v, smallest ids first, so the witness is deterministic.
    """
    nbrs = sorted(u for u in g.neighbors(v) if u not in banned)
    if len(nbrs) < 2:
        return None
    nbr_set = frozenset(nbrs)
    for u in nbrs:
        parent: dict[int, int | None] = {u: None}
        queue = [u]
        while queue:
            nxt: list[int] = []
            for x in queue:
                for y in sorted(g.neighbors(x)):
                    if y == v or y in banned or y in parent:
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


def has_private_cycle(g: Graph, v: int, banned: frozenset[int]) -> bool:
    """Boolean-only fast path of :func:`private_cycle`.

    v lies on a cycle avoiding `banned` iff two of its non-banned neighbors
    are connected in g - banned - v; checked with one union-find sweep.
    """
    nbrs = [u for u in g.neighbors(v) if u not in banned]
    if len(nbrs) < 2:
        return False
    gone = set(banned)
    gone.add(v)
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for w in g.vertices:
        if w not in gone:
            parent[w] = w
    for w in parent:
        for u in g.neighbors(w):
            if u <= w or u in gone:
                continue
            ru, rw = find(u), find(w)
            if ru != rw:
                parent[ru] = rw
    roots = {find(u) for u in nbrs}
    return len(roots) < len(nbrs)


def is_minimal_fvs(g: Graph, s: Iterable[int]) -> Certificate | None:
    """Certificate of minimality if s is a minimal fvs of g, else None.

    The certificate maps every v in s to a private cycle; an empty set on a
    forest yields the empty certificate.
    """
    s = frozenset(s)
    if not is_fvs(g, s):
        return None
    cert: Certificate = {}
    for v in sorted(s):
        cycle = private_cycle(g, v, s - {v})
        if cycle is None:
            return None
        cert[v] = cycle
    return cert


def is_minimal_fvs_by_deletion(g: Graph, s: Iterable[int]) -> bool:
    """Definitional minimality test: dropping any one vertex breaks fvs-ness."""
    s = frozenset(s)
    if not is_fvs(g, s):
        return False
    return all(not is_fvs(g, s - {v}) for v in s)


def greedy_minimal_fvs(g: Graph) -> frozenset[int]:
    """A minimal fvs found greedily.

    Starts from S = V and, in descending id order, drops every vertex whose
    removal from S keeps S an fvs.  One pass suffices: once a vertex had to
    be kept, shrinking S further never makes it droppable.
    """
    s = set(g.vertices)
    for v in sorted(s, reverse=True):
        if is_acyclic_without(g, s - {v}):
            s.remove(v)
    return frozenset(s)


def min_vertex_cover(g: Graph) -> frozenset[int]:
    """A minimum-cardinality vertex cover via pick-an-edge branching.

    Branches on the lexicographically smallest uncovered edge, including
    each endpoint in turn, and keeps the first minimum found, so the result
    is deterministic.
    """
    edges = sorted(g.edges())
    if not edges:
        return frozenset()
    best = set(g.vertices)
    chosen: set[int] = set()

    def branch() -> None:
        nonlocal best
        if len(chosen) >= len(best):
            return
        uncovered = next(
            (e for e in edges if e[0] not in chosen and e[1] not in chosen), None
        )
        if uncovered is None:
            best = set(chosen)
            return
        for w in uncovered:
            chosen.add(w)
            branch()
            chosen.discard(w)

    branch()
    return frozenset(best)


def partial_minimality_ok(
    g: Graph, in_set: Iterable[int], out_set: Iterable[int] = ()
) -> bool:
    """True iff every committed-in vertex still has a cycle of its own.

    For each w in `in_set` there must be a cycle through w once the rest of
    `in_set` is removed.  `out_set` vertices stay eligible cycle material by
    definition (they are merely outside the solution), so beyond the
    disjointness precondition they do not constrain the check.
    """
    in_set = frozenset(in_set)
    out_set = frozenset(out_set)
    if in_set & out_set:
        raise ValueError(f"overlapping sets: {sorted(in_set & out_set)}")
    return all(has_private_cycle(g, w, in_set - {w}) for w in sorted(in_set))


def members_have_private_cycles(
    g: Graph, solution: frozenset[int], probed: Iterable[int]
) -> bool:
    """Do all `probed` members of `solution` keep a private cycle?

    Same predicate as full minimality verification but restricted to a
    subset of the solution, which is what partial-solution checks need.
    """
    return all(has_private_cycle(g, w, solution - {w}) for w in sorted(probed))


def certificate_is_valid(
    g: Graph, s: frozenset[int], cert: Mapping[int, tuple[int, ...]]
) -> bool:
    """Validate a minimality certificate against the graph it came from."""
    if set(cert) != set(s):
        return False
    for v, cycle in cert.items():
        if len(cycle) < 3 or len(set(cycle)) != len(cycle) or v not in cycle:
            return False
        if any(w != v and w in s for w in cycle):
            return False
        closed = (*cycle, cycle[0])
        if any(not g.has_edge(a, b) for a, b in zip(closed, closed[1:])):
            return False
    return True
